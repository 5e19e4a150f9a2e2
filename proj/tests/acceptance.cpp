// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jung/batch.hpp"
#include "jung/cli.hpp"
#include "jung/generator.hpp"
#include "jung/parser.hpp"
#include "jung/puiseux.hpp"
#include "jung/witness.hpp"
#include "oracle.hpp"

using namespace jung;

namespace {

// Pinned tolerances and budgets.
constexpr int kAuditMaps = 500;
constexpr double kAuditBudgetSeconds = 60;
constexpr unsigned kLiteralComposeMaxDegree = 8;  // compose(invert(F), F) formed literally up to here
constexpr double kSlopeTolerance = 0.2;
constexpr double kFact1Tolerance = 1e-8;
constexpr double kWitnessValueTolerance = 1e-12;
constexpr int kWitnessMaps = 50;
constexpr int kWitnessMaxDegree = 12;
constexpr double kWitnessTol = 1e-6;
constexpr double kWitnessBudgetSeconds = 120;
constexpr int kParserPolys = 1000;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Criteria 1-3: the seeded audit corpus.

GenConfig audit_config(int s) {
  GenConfig g;
  g.seed = static_cast<std::uint64_t>(s);
  g.depth = 1 + static_cast<unsigned>((s - 1) % 5);
  g.max_tri_degree = 2 + static_cast<unsigned>((s - 1) % 3);
  g.coeff_bound = 3;
  g.field = s % 10 == 0 ? Field::gaussian : Field::rational;
  g.max_degree = 64;
  return g;
}

struct AuditCorpus {
  std::vector<PolyMap> maps;
  std::vector<std::optional<Decomposition>> decomps;
  double decompose_seconds = 0;
  int max_degree = 0;
};

AuditCorpus& audit_corpus() {
  static AuditCorpus c = [] {
    AuditCorpus a;
    for (int s = 1; s <= kAuditMaps; ++s) {
      a.maps.push_back(random_tame(audit_config(s)).map);
      a.max_degree = std::max({a.max_degree, a.maps.back().p.degree(), a.maps.back().q.degree()});
    }
    return a;
  }();
  return c;
}

Outcome criterion1() {
  AuditCorpus& c = audit_corpus();
  auto t0 = std::chrono::steady_clock::now();
  int ok = 0;
  for (const auto& f : c.maps) {
    auto d = decompose(f);
    if (d && recompose(*d) == f) ++ok;
    c.decomps.push_back(d ? std::optional<Decomposition>(*d) : std::nullopt);
  }
  double dt = seconds_since(t0);
  c.decompose_seconds = dt;
  return {ok == kAuditMaps && dt < kAuditBudgetSeconds,
          std::to_string(ok) + "/" + std::to_string(kAuditMaps) + " exact round trips, max degree " +
              std::to_string(c.max_degree) + ", " + fmt("%.2f s", dt)};
}

Outcome criterion2() {
  AuditCorpus& c = audit_corpus();
  int ok = 0, literal = 0;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    const PolyMap& f = c.maps[i];
    if (!c.decomps[i]) continue;
    PolyMap id = PolyMap::identity(f.field());
    Decomposition inv = inverse(*c.decomps[i]);
    auto g = invert(f);
    if (!g || *g != recompose(inv)) continue;
    bool good = apply_factors(inv, f) == id && apply_factors(*c.decomps[i], *g) == id;
    if (std::max(f.p.degree(), f.q.degree()) <= static_cast<int>(kLiteralComposeMaxDegree)) {
      ++literal;
      good = good && compose(*g, f) == id && compose(f, *g) == id;
    }
    if (good) ++ok;
  }
  return {ok == kAuditMaps, std::to_string(ok) + "/" + std::to_string(kAuditMaps) +
                                " maps with F^-1 o F = F o F^-1 = id exactly (" + std::to_string(literal) +
                                " by literal composition, all factor-wise)"};
}

Outcome criterion3() {
  const AuditCorpus& c = audit_corpus();
  int violations = 0;
  for (const auto& f : c.maps) {
    int lo = std::min(f.p.degree(), f.q.degree()), hi = std::max(f.p.degree(), f.q.degree());
    if (lo < 1 || hi % lo != 0) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations of min(deg P, deg Q) | max(deg P, deg Q) in " +
                               std::to_string(kAuditMaps) + " maps"};
}

// ---------------------------------------------------------------------------
// Criterion 4.

Outcome criterion4() {
  struct Case {
    const char* map;
  };
  bool all = true;
  std::string detail;
  for (const char* text : {"x^2; y", "x + y^2; y + x^2"}) {
    PolyMap f = parse_map(text);
    oracle::Sym expected = oracle::jacobian(oracle::from(f.p), oracle::from(f.q));
    auto d = decompose(f);
    auto w = verify_division(f);
    bool ok = !d && d.error().reason == RejectReason::non_constant_jacobian && d.error().poly &&
              oracle::same(expected, *d.error().poly) && !w && w.error().reason == RejectReason::non_constant_jacobian &&
              w.error().poly && oracle::same(expected, *w.error().poly);
    std::ostringstream out, err;
    ok = ok && cli::run({"check", text}, out, err) == cli::kRejected;
    all = all && ok;
    detail += std::string(detail.empty() ? "" : ", ") + "(" + text + ") -> " +
              (d ? "accepted" : std::string(reason_name(d.error().reason)) + " J = " + d.error().poly->str());
  }
  return {all, detail};
}

// ---------------------------------------------------------------------------
// Criteria 5 and 6: the Puiseux corpus.

const std::vector<const char*>& puiseux_corpus() {
  static const std::vector<const char*> corpus = {
      "y^2 - x^3",
      "x + y^2",
      "y^3 - 3*x*y - x^3",
      "y^2 - x^2 - 1",
      "y^3 - x",
      "y^2 - x^5",
      "y^4 - x^3",
      "y^3 - x^2*y - 1",
      "(y - x^2)^2 - x",
      "y^2 + x*y + 1",
      "y^5 - x^2",
      "y^6 - x^5",
      "y^3 + x^2*y + x",
      "(y^2 - x^3)^2 - x^5",
      "y^2 - x^2*y - x",
      "y^3 - x^4",
      "y + (x + y^2)^2",
      "y^6 - x^6 - x",
      "y^3 - x*y - x^2",
      "y^4 + x*y^2 + x^2*y + x",
  };
  return corpus;
}

// Largest exponent where the series differ; empty when they agree throughout
// the known part of both.
std::optional<Frac> separation(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::map<Frac, std::pair<Complex, Complex>, std::greater<>> m;
  for (const auto& t : a.terms) m[t.exp].first = t.coef;
  for (const auto& t : b.terms) m[t.exp].second = t.coef;
  std::optional<Frac> known = a.trunc_ord;
  if (b.trunc_ord && (!known || *b.trunc_ord > *known)) known = b.trunc_ord;
  for (const auto& [e, ab] : m) {
    if (known && e <= *known) break;
    Real scale = std::max<Real>({Real(1), std::abs(ab.first), std::abs(ab.second)});
    if (std::abs(ab.first - ab.second) > 1e-8 * scale) return e;
  }
  return std::nullopt;
}

double log_abs(const oracle::GQ& z) {
  mpq_class n = z.re * z.re + z.im * z.im;
  if (sgn(n) == 0) return -INFINITY;
  // log of a rational via numerator and denominator sizes, safe from overflow
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, n.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, n.get_den_mpz_t());
  return 0.5 * (std::log(mn / md) + static_cast<double>(en - ed) * std::log(2.0));
}

struct ResidualCheck {
  bool pass = false;
  bool exact = false;
  double slope = 0, predicted = 0;
  std::string why;
};

// Residual h(x, u_N(x)) along t = rho * omega, x = t^ram, for the shortest
// prefix u_N containing every separation exponent of u from the other
// conjugates. Then h(x, u_N) ~ C x^(sum_j ord(u - u_j) + e_next).
ResidualCheck residual_check(const Polynomial& h, const BranchSet& bs, std::size_t which) {
  ResidualCheck rc;
  const PuiseuxSeries& u = bs.branches[which];
  Frac sep_sum(0);
  std::optional<Frac> sep_min;
  for (std::size_t b = 0; b < bs.branches.size(); ++b)
    for (unsigned i = 0; i < bs.branches[b].ram; ++i) {
      if (b == which && i == 0) continue;
      auto s = separation(u, conjugate(bs.branches[b], i));
      if (!s) {
        rc.why = "two conjugates agree throughout their known terms";
        return rc;
      }
      sep_sum = sep_sum + *s;
      if (!sep_min || *s < *sep_min) sep_min = *s;
    }
  std::size_t n = 0;
  while (n < u.terms.size() && (!sep_min || u.terms[n].exp >= *sep_min)) ++n;

  const unsigned ram = u.ram;
  oracle::Sym hs = oracle::from(h);
  const oracle::GQ omega(mpq_class(3, 5), mpq_class(4, 5));
  auto residual = [&](double rho_d) {
    oracle::GQ t = oracle::GQ(mpq_class(rho_d)) * omega;
    oracle::GQ x = oracle::pow(t, ram);
    oracle::GQ y;
    for (std::size_t k = 0; k < n; ++k) {
      long idx = static_cast<long>(u.terms[k].exp.num() * (static_cast<std::int64_t>(ram) / u.terms[k].exp.den()));
      y = y + oracle::exact({static_cast<double>(u.terms[k].coef.real()), static_cast<double>(u.terms[k].coef.imag())}) *
                  oracle::pow(t, idx);
    }
    return oracle::evaluate(hs, x, y);
  };

  if (n == u.terms.size()) {
    if (u.trunc_ord) {
      rc.why = "series too short to pass its separation exponents";
      return rc;
    }
    // Exact finite branch: the residual is limited only by coefficient rounding.
    rc.exact = true;
    double worst = -INFINITY;
    for (double rho : {10.0, 100.0}) {
      oracle::GQ r = residual(rho);
      double scale = 0;
      for (const auto& [k, v] : hs) scale = std::max(scale, std::abs(v.cd()));
      worst = std::max(worst, log_abs(r) - std::log(scale) - static_cast<double>(h.degree()) * ram * std::log(rho));
    }
    rc.pass = worst < std::log(1e-12);
    rc.why = "exact series, relative residual " + fmt("%.1e", std::exp(worst));
    return rc;
  }

  Frac e_next = u.terms[n].exp;
  rc.predicted = (sep_sum + e_next).to_double();
  double span = (u.terms.front().exp - e_next).to_double();
  // |x| stays where rounding in the prefix coefficients is invisible.
  double x2 = std::min(1e4, std::pow(10.0, 8.0 / std::max(span, 1.0)));
  double x1 = x2 / 10;
  double rho1 = std::pow(x1, 1.0 / ram), rho2 = std::pow(x2, 1.0 / ram);
  double l1 = log_abs(residual(rho1)), l2 = log_abs(residual(rho2));
  rc.slope = (l2 - l1) / (ram * (std::log(mpq_class(rho2).get_d()) - std::log(mpq_class(rho1).get_d())));
  rc.pass = std::isfinite(rc.slope) && std::abs(rc.slope - rc.predicted) <= kSlopeTolerance;
  rc.why = "slope " + fmt("%.3f", rc.slope) + " vs predicted " + fmt("%.3f", rc.predicted);
  return rc;
}

Outcome criterion5() {
  int branches = 0, exact = 0, bad = 0;
  std::string detail;
  double worst = 0;
  for (const char* text : puiseux_corpus()) {
    Polynomial h = parse_poly(text);
    BranchSet bs;
    try {
      bs = expansions_at_infinity(h);
    } catch (const std::exception& e) {
      ++bad;
      detail += std::string("; ") + text + ": " + e.what();
      continue;
    }
    if (bs.total_ram() != h.degree_in(Var::y)) {
      ++bad;
      detail += std::string("; ") + text + ": sum of ramifications " + std::to_string(bs.total_ram());
    }
    for (std::size_t b = 0; b < bs.branches.size(); ++b) {
      ResidualCheck rc = residual_check(h, bs, b);
      ++branches;
      if (rc.exact) ++exact;
      if (!rc.exact) worst = std::max(worst, std::abs(rc.slope - rc.predicted));
      if (!rc.pass) {
        ++bad;
        detail += std::string("; ") + text + " branch " + std::to_string(b) + ": " + rc.why;
      }
    }
  }
  return {bad == 0, std::to_string(puiseux_corpus().size()) + " polynomials, " + std::to_string(branches) +
                        " branch classes (" + std::to_string(exact) + " exact), max |slope - predicted| " +
                        fmt("%.3f", worst) + detail};
}

Outcome criterion6() {
  int members = 0, bad = 0;
  double worst = 0;
  std::string detail;
  for (const char* text : puiseux_corpus()) {
    Polynomial h = parse_poly(text);
    PuiseuxConfig cfg;
    cfg.trunc_terms = static_cast<unsigned>(6 * h.degree() * h.degree_in(Var::y) + 8);
    BranchSet bs = expansions_at_infinity(h, cfg);
    if (bs.branches.size() != 1) continue;
    ++members;
    try {
      ApproxPolynomial a = fact1_product(bs.branches[0], bs.branches[0].ram);
      double scale = 1;
      for (const auto& t : h.terms()) scale = std::max(scale, std::abs(t.coef.to_complex()));
      double err = 0;
      std::set<std::pair<unsigned, unsigned>> seen;
      for (const auto& t : h.terms()) {
        seen.insert({t.mono.x, t.mono.y});
        Complex want(static_cast<Real>(t.coef.re().get_d()), static_cast<Real>(t.coef.im().get_d()));
        err = std::max(err, static_cast<double>(std::abs(a.coeff(t.mono.x, t.mono.y) - want)));
      }
      for (const auto& e : a.terms)
        if (!seen.count({e.x, e.y})) err = std::max(err, static_cast<double>(std::abs(e.c)));
      err /= scale;
      worst = std::max(worst, err);
      if (err > kFact1Tolerance) {
        ++bad;
        detail += std::string("; ") + text + ": relative error " + fmt("%.2e", err);
      }
    } catch (const std::exception& e) {
      ++bad;
      detail += std::string("; ") + text + ": " + e.what();
    }
  }
  return {bad == 0 && members > 0, std::to_string(members) + " one-branch members rebuilt, max relative error " +
                                       fmt("%.2e", worst) + detail};
}

// ---------------------------------------------------------------------------
// Criterion 7: the shear (x + y^2, y), checked against exact substitution.

struct FaceOracle {
  long a;
  std::vector<oracle::GQ> face;  // ascending in xi
};

// h(t^m, sum_k c_k t^(m-k) + xi t^(m-n)): the top power of t and its
// coefficient as a polynomial in xi.
FaceOracle face_oracle(const Polynomial& h, long m, long n, const std::vector<oracle::GQ>& c) {
  // Laurent polynomial in (t, xi) keyed by (t-exponent, xi-exponent).
  using L = std::map<std::pair<long, long>, oracle::GQ>;
  auto mul = [](const L& a, const L& b) {
    L r;
    for (const auto& [ka, va] : a)
      for (const auto& [kb, vb] : b) oracle::add_to(r, {ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  };
  L y;
  for (long k = 0; k < n; ++k)
    if (!c[static_cast<std::size_t>(k)].zero()) y[{m - k, 0}] = c[static_cast<std::size_t>(k)];
  y[{m - n, 1}] = oracle::GQ(1);
  L total;
  for (const auto& t : h.terms()) {
    L term{{{m * static_cast<long>(t.mono.x), 0}, oracle::GQ(t.coef.re(), t.coef.im())}};
    for (unsigned i = 0; i < t.mono.y; ++i) term = mul(term, y);
    for (const auto& [k, v] : term) oracle::add_to(total, k, v);
  }
  FaceOracle out{std::numeric_limits<long>::min(), {}};
  for (const auto& [k, v] : total) out.a = std::max(out.a, k.first);
  for (const auto& [k, v] : total)
    if (k.first == out.a) {
      if (out.face.size() <= static_cast<std::size_t>(k.second)) out.face.resize(static_cast<std::size_t>(k.second) + 1);
      out.face[static_cast<std::size_t>(k.second)] = v;
    }
  return out;
}

std::vector<oracle::GQ> derivative(const std::vector<oracle::GQ>& p) {
  std::vector<oracle::GQ> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * oracle::GQ(static_cast<long>(k)));
  return d;
}

std::vector<oracle::GQ> pmul(const std::vector<oracle::GQ>& a, const std::vector<oracle::GQ>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<oracle::GQ> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

double cpoly_distance(const CPoly& p, const std::vector<oracle::GQ>& q) {
  double d = 0;
  std::size_t n = std::max(p.c.size(), q.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> a = k < p.c.size() ? std::complex<double>(p.c[k]) : 0.0;
    std::complex<double> b = k < q.size() ? q[k].cd() : 0.0;
    d = std::max(d, std::abs(a - b));
  }
  return d;
}

Outcome criterion7() {
  PolyMap f = parse_map("x + y^2; y");
  auto r = verify_division(f);
  if (!r) return {false, "rejected: " + r.error().str()};
  const WitnessReport& rep = *r;

  // Oracle: u = i x^(1/2) solves P = 0 exactly on x = t^2, v = 0 solves Q = 0,
  // so theta = ord(u - v) = 1/2 and m = 2, n = m (1 - theta) = 1.
  oracle::Sym P = oracle::from(rep.normalized.map.p), Q = oracle::from(rep.normalized.map.q);
  oracle::GQ t(mpq_class(7, 3)), i_unit(0, 1);
  bool u_exact = oracle::evaluate(P, oracle::pow(t, 2), i_unit * t).zero();
  bool v_exact = oracle::evaluate(Q, oracle::pow(t, 2), oracle::GQ(0)).zero();
  Frac theta_oracle(1, 2);
  long m = 2, n = 1;
  std::vector<oracle::GQ> c(1, oracle::GQ(0));
  FaceOracle pf = face_oracle(rep.normalized.map.p, m, n, c);
  FaceOracle qf = face_oracle(rep.normalized.map.q, m, n, c);
  std::vector<oracle::GQ> jphi = pmul(pf.face, derivative(qf.face));
  {
    std::vector<oracle::GQ> rhs = pmul(qf.face, derivative(pf.face));
    std::size_t len = std::max(jphi.size(), rhs.size());
    jphi.resize(len);
    rhs.resize(len);
    for (std::size_t k = 0; k < len; ++k) jphi[k] = oracle::GQ(pf.a) * jphi[k] - oracle::GQ(qf.a) * rhs[k];
  }
  // Expected closed forms: P_phi = 1 + xi^2, Q_phi = xi, J_phi = 2.
  bool oracle_closed = pf.face == std::vector<oracle::GQ>{1, 0, 1} && qf.face == std::vector<oracle::GQ>{0, 1} &&
                       pf.a == 2 && qf.a == 1 && jphi.size() >= 1 && jphi[0] == oracle::GQ(2) &&
                       std::all_of(jphi.begin() + 1, jphi.end(), [](const oracle::GQ& z) { return z.zero(); });

  bool ok = u_exact && v_exact && oracle_closed && rep.all_pass() && rep.theta && *rep.theta == theta_oracle &&
            rep.phi && rep.phi->m_phi == 2 && rep.phi->n_phi == 1 && rep.p_face && rep.q_face &&
            rep.p_face->a == pf.a && rep.q_face->a == qf.a &&
            cpoly_distance(rep.p_face->face_poly, pf.face) <= kWitnessValueTolerance &&
            cpoly_distance(rep.q_face->face_poly, qf.face) <= kWitnessValueTolerance && rep.jphi &&
            cpoly_distance(*rep.jphi, jphi) <= kWitnessValueTolerance &&
            std::abs(std::abs(rep.jphi->c[0]) - 2.0) <= kWitnessValueTolerance && rep.deg_p == 2 && rep.deg_q == 1 &&
            rep.phi->m_phi == static_cast<unsigned>(rep.deg_p) && rep.conclusion() == "degQ_divides_degP";
  std::string detail = "theta = " + (rep.theta ? rep.theta->str() : std::string("?")) +
                       ", P_phi = " + (rep.p_face ? rep.p_face->face_poly.str() : "?") +
                       ", Q_phi = " + (rep.q_face ? rep.q_face->face_poly.str() : "?") +
                       ", a = " + (rep.p_face ? std::to_string(rep.p_face->a) : "?") +
                       ", b = " + (rep.q_face ? std::to_string(rep.q_face->a) : "?") +
                       ", m = " + (rep.phi ? std::to_string(rep.phi->m_phi) : "?") +
                       ", |J_phi| = " + (rep.jphi ? fmt("%.12g", std::abs(rep.jphi->c[0])) : "?") + ", " +
                       std::to_string(rep.deg_q) + " | " + std::to_string(rep.deg_p) +
                       (oracle_closed && u_exact && v_exact ? ", oracle agrees" : ", oracle MISMATCH");
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// Criterion 8.

Outcome criterion8() {
  std::vector<PolyMap> maps;
  std::map<int, int> by_degree;
  for (std::uint64_t s = 1; static_cast<int>(maps.size()) < kWitnessMaps; ++s) {
    GenConfig g;
    g.seed = s;
    g.depth = 1 + static_cast<unsigned>(s % 5);
    g.max_tri_degree = 2 + static_cast<unsigned>((s / 5) % 2);
    g.field = s % 7 == 0 ? Field::gaussian : Field::rational;
    g.max_degree = kWitnessMaxDegree;
    if (worst_case_degree(g) > static_cast<unsigned>(kWitnessMaxDegree)) continue;
    Generated gen = random_tame(g);
    maps.push_back(gen.map);
    ++by_degree[std::max(gen.map.p.degree(), gen.map.q.degree())];
  }
  WitnessConfig cfg;
  cfg.tol = kWitnessTol;
  auto t0 = std::chrono::steady_clock::now();
  auto results = verify_parallel(maps, cfg);
  double dt = seconds_since(t0);
  int ok = 0;
  std::string detail;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    bool good = r && r->all_pass() && r->phi && static_cast<int>(r->phi->m_phi) == r->deg_p;
    if (good) {
      ++ok;
    } else {
      detail += "; " + maps[i].str() + ": " + (r ? (r->failure.empty() ? "verdict failed" : r->failure) : r.error().str());
    }
  }
  std::string degrees;
  for (const auto& [d, k] : by_degree) degrees += (degrees.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(k);
  return {ok == kWitnessMaps && dt < kWitnessBudgetSeconds,
          std::to_string(ok) + "/" + std::to_string(kWitnessMaps) + " witnesses pass at tol " + fmt("%.0e", kWitnessTol) +
              " (max degree histogram " + degrees + "), " + fmt("%.2f s", dt) + detail};
}

// ---------------------------------------------------------------------------
// Criterion 9.

Polynomial random_poly(std::mt19937_64& rng, Field field) {
  std::uniform_int_distribution<int> nterms(0, 8), ex(0, 6), num(-60, 60), den(1, 24), coin(0, 2);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial mono{static_cast<unsigned>(ex(rng)), static_cast<unsigned>(ex(rng))};
    mpq_class re(num(rng), den(rng));
    re.canonicalize();
    mpq_class im = 0;
    if (field == Field::gaussian && coin(rng) != 0) {
      im = mpq_class(num(rng), den(rng));
      im.canonicalize();
    }
    terms.push_back({mono, Coefficient(re, im)});
  }
  return Polynomial(field, std::move(terms));
}

Outcome criterion9() {
  std::mt19937_64 rng(20240917);
  int ok = 0;
  std::string detail;
  for (int i = 0; i < kParserPolys; ++i) {
    Field field = i % 3 == 0 ? Field::gaussian : Field::rational;
    Polynomial p = random_poly(rng, field);
    std::string text = p.str();
    try {
      Polynomial back = parse_poly(text, field);
      if (back == p && back.str() == text)
        ++ok;
      else if (detail.size() < 200)
        detail += "; mismatch on '" + text + "'";
    } catch (const ParseError& e) {
      if (detail.size() < 200) detail += "; '" + text + "': " + e.what();
    }
  }
  struct Bad {
    const char* text;
    std::size_t pos;
  };
  const std::vector<Bad> malformed = {
      {"x +", 3}, {"(x + y", 6}, {"x^", 2}, {"3/0*x", 2}, {"x + * y", 4}, {"2 ^ x", 4}, {"x $ y", 2}, {")", 0}, {"", 0},
  };
  int errors_ok = 0;
  for (const auto& b : malformed) {
    try {
      parse_poly(b.text);
      detail += std::string("; accepted malformed '") + b.text + "'";
    } catch (const ParseError& e) {
      if (e.pos() == b.pos && std::string(e.what()).find("position " + std::to_string(b.pos)) != std::string::npos)
        ++errors_ok;
      else
        detail += std::string("; '") + b.text + "' reported position " + std::to_string(e.pos());
    }
  }
  int exit_ok = 0;
  const std::vector<std::vector<std::string>> bad_cli = {
      {"check", "x + * y; y"}, {"decompose", "x^2 y"}, {"verify-division", "(x; y"}, {"invert", "x; y; x"},
      {"frobnicate"}, {"check"},
  };
  for (const auto& args : bad_cli) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    bool annotated = args.size() < 2 || args[0] == "frobnicate" || err.str().find("position") != std::string::npos;
    if (code == cli::kUsage && annotated)
      ++exit_ok;
    else
      detail += "; cli " + args[0] + " exit " + std::to_string(code);
  }
  bool pass = ok == kParserPolys && errors_ok == static_cast<int>(malformed.size()) &&
              exit_ok == static_cast<int>(bad_cli.size());
  return {pass, std::to_string(ok) + "/" + std::to_string(kParserPolys) + " round trips, " + std::to_string(errors_ok) +
                    "/" + std::to_string(malformed.size()) + " malformed inputs located, " + std::to_string(exit_ok) +
                    "/" + std::to_string(bad_cli.size()) + " CLI usage errors exit 2" + detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"round-trip decomposition", criterion1}, {"inverse law", criterion2},
      {"division property", criterion3},       {"rejection soundness", criterion4},
      {"puiseux residual decay", criterion5},  {"fact 1 reconstruction", criterion6},
      {"worked shear witness", criterion7},    {"witness suite", criterion8},
      {"parser round trip", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

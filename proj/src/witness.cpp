#include "jung/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace jung {

namespace {

// Largest exponent where a and b differ by more than drop_tol relative to
// their size there; empty when both are exact and equal.
std::optional<Frac> ord_difference(const PuiseuxSeries& a, const PuiseuxSeries& b, Real drop_tol) {
  std::map<Frac, std::pair<Complex, Complex>, std::greater<>> merged;
  for (const auto& t : a.terms) merged[t.exp].first = t.coef;
  for (const auto& t : b.terms) merged[t.exp].second = t.coef;
  std::optional<Frac> known;  // exponents above this are known in both
  if (a.trunc_ord) known = a.trunc_ord;
  if (b.trunc_ord && (!known || *b.trunc_ord > *known)) known = b.trunc_ord;
  for (const auto& [e, ab] : merged) {
    if (known && e <= *known) break;
    Real scale = std::max<Real>({Real(1), std::abs(ab.first), std::abs(ab.second)});
    if (std::abs(ab.first - ab.second) > drop_tol * scale) return e;
  }
  if (known) throw TruncationError("branches agree down to x^(" + known->str() + ")");
  return std::nullopt;
}

Real rel_value(const CPoly& p, Complex z) {
  Real s = p.abs_eval(std::abs(z));
  return s == 0 ? 0 : std::abs(p(z)) / s;
}

std::vector<Complex> roots_of(const CPoly& p, const RootOptions& opt) {
  return p.degree() >= 1 ? aberth_roots(p, opt) : std::vector<Complex>{};
}

// min over roots z of |p'(z)| relative to the scale of p' at |z|.
Real simplicity_margin(const CPoly& p, const std::vector<Complex>& roots) {
  CPoly dp = p.derivative();
  Real m = 1;
  for (auto z : roots) {
    Real s = dp.abs_eval(std::abs(z));
    m = std::min(m, s == 0 ? Real(0) : std::abs(dp(z)) / s);
  }
  return m;
}

bool divides(long a, long b) { return a != 0 && b % a == 0; }

}  // namespace

ThetaResult compute_theta(const BranchSet& us, const BranchSet& vs, Real drop_tol) {
  if (us.branches.empty() || vs.branches.empty()) throw std::invalid_argument("compute_theta needs nonempty branch sets");
  ThetaResult best;
  bool have = false;
  for (std::size_t bu = 0; bu < us.branches.size(); ++bu)
    for (unsigned i = 0; i < us.branches[bu].ram; ++i) {
      PuiseuxSeries ui = conjugate(us.branches[bu], i);
      for (std::size_t bv = 0; bv < vs.branches.size(); ++bv)
        for (unsigned j = 0; j < vs.branches[bv].ram; ++j) {
          std::optional<Frac> o = ord_difference(ui, conjugate(vs.branches[bv], j), drop_tol);
          bool better = !have || (!o && best.theta) || (o && best.theta && *o < *best.theta);
          if (better) {
            best = {o, bu, bv, i, j};
            have = true;
          }
        }
    }
  return best;
}

CPoly j_phi(const FaceData& p, const FaceData& q) {
  return Complex(static_cast<Real>(p.a)) * p.face_poly * q.face_poly.derivative() -
         Complex(static_cast<Real>(q.a)) * q.face_poly * p.face_poly.derivative();
}

bool WitnessReport::all_pass() const {
  return failure.empty() && !verdicts.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const Verdict* WitnessReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

std::string WitnessReport::conclusion() const {
  if (!all_pass()) return "unverified";
  return swapped ? "degP_divides_degQ" : "degQ_divides_degP";
}

Result<WitnessReport, RejectionEvidence> verify_division(const PolyMap& f, const WitnessConfig& cfg) {
  if (f.p.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, f.p, {}};
  if (f.q.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, f.q, {}};
  KellerCheck k = is_keller(f);
  if (k.jacobian.is_zero()) return RejectionEvidence{RejectReason::zero_jacobian, k.jacobian, {}};
  if (!k.keller) return RejectionEvidence{RejectReason::non_constant_jacobian, k.jacobian, {}};

  WitnessReport rep{f};
  rep.swapped = f.p.degree() < f.q.degree();
  PolyMap ordered = rep.swapped ? PolyMap(f.q, f.p) : f;
  rep.normalized = monic_normalize(ordered);
  const Polynomial& P = rep.normalized.map.p;
  const Polynomial& Q = rep.normalized.map.q;
  rep.deg_p = P.degree();
  rep.deg_q = Q.degree();
  rep.jacobian_const = jacobian(rep.normalized.map).constant_term();
  auto add = [&](std::string name, bool pass, double margin) { rep.verdicts.push_back({std::move(name), pass, margin}); };

  try {
    PuiseuxConfig pc = cfg.puiseux;
    unsigned terms = pc.trunc_terms ? pc.trunc_terms : static_cast<unsigned>(2 * rep.deg_p + 4);
    BranchSet us, vs;
    ThetaResult th;
    for (int attempt = 0;; ++attempt, terms *= 2) {
      pc.trunc_terms = terms;
      us = expansions_at_infinity(P, pc);
      vs = expansions_at_infinity(Q, pc);
      if (us.branches.size() != 1 || vs.branches.size() != 1) break;
      try {
        th = compute_theta(us, vs, pc.drop_tol);
        break;
      } catch (const TruncationError&) {
        if (attempt >= cfg.max_deepen) throw;
      }
    }
    rep.trunc_terms = terms;

    bool one_p = us.branches.size() == 1 && us.branches[0].ram == static_cast<unsigned>(rep.deg_p);
    bool one_q = vs.branches.size() == 1 && vs.branches[0].ram == static_cast<unsigned>(rep.deg_q);
    add("one_branch_p", one_p, static_cast<double>(us.branches.size()));
    add("one_branch_q", one_q, static_cast<double>(vs.branches.size()));
    if (!one_p || !one_q) return rep;

    add("theta_finite", th.theta.has_value(), 0);
    if (!th.theta) return rep;
    rep.theta = th.theta;
    rep.sigma = th.i;
    rep.delta = th.j;
    rep.u = conjugate(us.branches[0], th.i);
    rep.v = conjugate(vs.branches[0], th.j);
    Frac theta = *th.theta;
    rep.alpha_u = rep.u->coeff(theta);
    rep.beta_v = rep.v->coeff(theta);
    if (std::abs(rep.alpha_u) <= pc.drop_tol) rep.alpha_u = 0;
    if (std::abs(rep.beta_v) <= pc.drop_tol) rep.beta_v = 0;

    rep.phi = build_phi(*rep.u, theta);
    const ParamSeries& phi = *rep.phi;
    add("theta_exact", phi.theta() == theta, 0);
    // P and Q are monic in y, so each is the product of (y - s) over the
    // conjugates s of its branches.
    rep.p_face = face_from_branches(us, Complex(1), phi, pc.drop_tol);
    rep.q_face = face_from_branches(vs, Complex(1), phi, pc.drop_tol);
    rep.jphi = j_phi(*rep.p_face, *rep.q_face);
    const CPoly& pf = rep.p_face->face_poly;
    const CPoly& qf = rep.q_face->face_poly;

    Real tol = cfg.tol;
    Real r1 = std::max(rel_value(pf, rep.alpha_u), rel_value(qf, rep.beta_v));
    add("claim1a", r1 <= tol, static_cast<double>(r1));

    std::vector<Complex> proots = roots_of(pf, pc.roots), qroots = roots_of(qf, pc.roots);
    Real common = 1;
    for (auto z : proots) common = std::min(common, std::max(rel_value(pf, z), rel_value(qf, z)));
    for (auto z : qroots) common = std::min(common, std::max(rel_value(pf, z), rel_value(qf, z)));
    add("claim1b", common > tol, static_cast<double>(common));

    long a = rep.p_face->a, b = rep.q_face->a;
    add("positivity", a > 0 && b > 0, static_cast<double>(std::min(a, b)));
    long m = phi.m_phi, n = phi.n_phi;
    add("degree_relation", a + b + n == 2 * m, static_cast<double>(a + b + n - 2 * m));

    const CPoly& J = *rep.jphi;
    Complex j0 = J.c.empty() ? Complex(0) : J.c[0];
    Real spread = 0;
    for (std::size_t i = 1; i < J.c.size(); ++i) spread = std::max(spread, std::abs(J.c[i]));
    Real rel_spread = std::abs(j0) > 0 ? spread / std::abs(j0) : std::numeric_limits<Real>::infinity();
    add("claim2_constant", rel_spread <= tol, static_cast<double>(rel_spread));
    Real expect = static_cast<Real>(m) * std::abs(rep.jacobian_const.to_complex());
    Real mag_err = std::abs(std::abs(j0) - expect) / expect;
    add("claim2_magnitude", mag_err <= tol, static_cast<double>(mag_err));
    Real simple = std::min(simplicity_margin(pf, proots), simplicity_margin(qf, qroots));
    add("claim2_simple", simple > pc.simple_tol, static_cast<double>(simple));

    bool alpha_nz = rep.alpha_u != Complex(0), beta_nz = rep.beta_v != Complex(0);
    bool roots_ok = rep.deg_p > rep.deg_q ? (alpha_nz && !beta_nz) : (alpha_nz || beta_nz);
    add("finale", roots_ok && m == rep.deg_p, static_cast<double>(m - rep.deg_p));

    // The lifts of alpha_u and beta_v have multiplicity dividing m_phi, equal
    // to it when the root is nonzero.
    bool fact2 = true;
    try {
      rep.u_bar = lift_by_conjugate(us, phi, rep.alpha_u, pc.drop_tol);
      rep.v_bar = lift_by_conjugate(vs, phi, rep.beta_v, pc.drop_tol);
      for (auto [s, c] : {std::pair{&*rep.u_bar, rep.alpha_u}, std::pair{&*rep.v_bar, rep.beta_v}}) {
        long mu = multiplicity(*s);
        fact2 = fact2 && divides(mu, m) && (c == Complex(0) || mu == m);
      }
    } catch (const PuiseuxError&) {
      fact2 = false;
    }
    add("fact2_lift", fact2, rep.u_bar ? static_cast<double>(multiplicity(*rep.u_bar)) : 0.0);
    add("divisibility", divides(rep.deg_q, rep.deg_p), static_cast<double>(rep.deg_p % std::max(rep.deg_q, 1)));
  } catch (const std::exception& e) {
    rep.failure = e.what();
  }
  return rep;
}

}  // namespace jung

#include "jung/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

namespace jung {

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;

// Correctly rounded for Real wider than double as well (hi + lo split).
Real to_real(const mpq_class& q) {
  mpf_class f(q, 192);
  double hi = f.get_d();
  mpf_class rest = f - hi;
  return static_cast<Real>(hi) + static_cast<Real>(rest.get_d());
}

Complex to_cx(const Coefficient& c) { return {to_real(c.re()), to_real(c.im())}; }

std::int64_t exp_index(Frac e, unsigned ram) { return e.num() * (static_cast<std::int64_t>(ram) / e.den()); }

// Argument in [0, 2 pi), with values just below 0 folded onto 0.
Real arg_0_2pi(Complex z) {
  Real a = std::arg(z);
  if (a < -1e-9) a += kTwoPi;
  return std::max<Real>(a, 0);
}

struct Cell {
  Complex v{0};
  Real mag = 0;  // sum of |contribution|; the scale for zero tests
};

// sum v s^h w^j over rows h < cap. A tainted column lost contributions at rows
// >= cap, so its order in s is unknown beyond the stored rows.
struct Grid {
  long cap;
  std::vector<std::vector<Cell>> col;
  std::vector<bool> tainted;

  Grid(std::size_t ncols, long cap_)
      : cap(cap_), col(ncols, std::vector<Cell>(static_cast<std::size_t>(std::max(cap_, 0L)))), tainted(ncols, false) {}

  void add(long h, std::size_t j, Complex v, Real mag) {
    if (mag == 0) return;
    if (h < 0) throw std::logic_error("Newton polygon substitution produced a negative order");
    if (h >= cap) {
      tainted[j] = true;
      return;
    }
    Cell& c = col[j][static_cast<std::size_t>(h)];
    c.v += v;
    c.mag += mag;
  }

  void clean(Real drop_tol) {
    for (auto& column : col)
      for (auto& c : column)
        if (std::abs(c.v) <= drop_tol * c.mag) c = Cell{};
  }
};

enum class Kind { absent, known, bound };

struct Point {
  long j;
  long h;
  Kind kind;
};

Point column_point(const Grid& g, long j) {
  const auto& column = g.col[static_cast<std::size_t>(j)];
  for (std::size_t h = 0; h < column.size(); ++h)
    if (column[h].v != Complex(0)) return {j, static_cast<long>(h), Kind::known};
  if (g.tainted[static_cast<std::size_t>(j)]) return {j, g.cap, Kind::bound};
  return {j, 0, Kind::absent};
}

std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& a = hull.back();
      __int128 cross = static_cast<__int128>(a.j - o.j) * (p.h - o.h) - static_cast<__int128>(a.h - o.h) * (p.j - o.j);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

std::vector<std::vector<Real>> binomials(std::size_t n) {
  std::vector<std::vector<Real>> b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    b[i].assign(i + 1, 1);
    for (std::size_t k = 1; k < i; ++k) b[i][k] = b[i - 1][k - 1] + b[i - 1][k];
  }
  return b;
}

// s1^{-K} g(s1^q, s1^p (c + w1)).
Grid substitute(const Grid& g, long p, long q, Complex c, long K, Real drop_tol) {
  std::size_t ncols = g.col.size();
  Grid out(ncols, q * g.cap - K);
  auto binom = binomials(ncols);
  std::vector<Complex> cp(ncols, 1);
  std::vector<Real> ap(ncols, 1);
  for (std::size_t k = 1; k < ncols; ++k) {
    cp[k] = cp[k - 1] * c;
    ap[k] = ap[k - 1] * std::abs(c);
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    if (g.tainted[j])
      for (std::size_t jj = 0; jj <= j; ++jj) out.tainted[jj] = true;
    const auto& column = g.col[j];
    for (std::size_t h = 0; h < column.size(); ++h) {
      const Cell& cell = column[h];
      if (cell.v == Complex(0)) continue;
      long base = q * static_cast<long>(h) + p * static_cast<long>(j) - K;
      for (std::size_t jj = 0; jj <= j; ++jj)
        out.add(base, jj, cell.v * binom[j][jj] * cp[j - jj], cell.mag * binom[j][jj] * ap[j - jj]);
    }
  }
  out.clean(drop_tol);
  return out;
}

Complex principal_root(Complex z, long q) {
  if (q == 1) return z;
  return std::polar(std::pow(std::abs(z), Real(1) / static_cast<Real>(q)), std::arg(z) / static_cast<Real>(q));
}

struct PathTerm {
  Frac gamma;  // exponent in the engine's base variable
  Complex c;
};

struct Leaf {
  std::vector<PathTerm> terms;
  long qtot;
  std::optional<Frac> next;  // first undetermined exponent; empty when exact
  unsigned count;
};

// Classical Newton-Puiseux at s = 0 for roots w(s) -> 0 of a grid polynomial
// (all roots at the top node).
struct Engine {
  const PuiseuxConfig& cfg;
  std::size_t want_terms;
  std::size_t offset = 0;  // terms already fixed by the caller
  std::vector<Leaf> leaves;

  void node(const Grid& g, long r, bool top, const std::vector<PathTerm>& path, Frac gamma, long qtot) {
    std::size_t have = path.size() + offset;
    if (!top && r == 1 && have >= want_terms) {
      Point p0 = column_point(g, 0);
      std::optional<Frac> next;
      if (p0.kind != Kind::absent) next = gamma + Frac(p0.h, qtot);
      leaves.push_back({path, qtot, next, 1});
      return;
    }
    if (have > 4 * want_terms + 64)
      throw PuiseuxError("branches do not separate; the polynomial may have a repeated factor");

    std::vector<Point> pts;
    for (long j = 0; j <= r; ++j) {
      Point p = column_point(g, j);
      if (p.kind != Kind::absent) pts.push_back(p);
    }
    if (pts.empty() || pts.back().j != r || pts.back().kind != Kind::known || pts.back().h != 0)
      throw PuiseuxError("Newton polygon lost its pivot (numerical breakdown)");
    if (pts.front().j > 0) leaves.push_back({path, qtot, std::nullopt, static_cast<unsigned>(pts.front().j)});

    auto hull = lower_hull(pts);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
      const Point& a = hull[e];
      const Point& b = hull[e + 1];
      long dj = b.j - a.j, dh = a.h - b.h;
      if (dh < 0 || (dh == 0 && !top))
        throw PuiseuxError("Newton polygon edge with non-positive slope (numerical breakdown)");
      if (a.kind == Kind::bound) {
        if (dj > 1) throw TruncationError("branches not separated within the truncation");
        leaves.push_back({path, qtot, gamma + Frac(dh, dj * qtot), 1});
        continue;
      }
      Frac slope(dh, dj);
      long p = slope.num(), q = slope.den();
      long deg = dj / q;
      std::vector<Complex> face(static_cast<std::size_t>(deg + 1));
      for (long k = 0; k <= deg; ++k)
        face[static_cast<std::size_t>(k)] =
            g.col[static_cast<std::size_t>(a.j + k * q)][static_cast<std::size_t>(a.h - p * k)].v;
      long K = q * a.h + p * a.j;
      for (const auto& cl : root_clusters(CPoly(face), cfg.roots)) {
        Complex c = principal_root(cl.z, q);
        Grid next = substitute(g, p, q, c, K, cfg.cancel_tol);
        Frac g2 = gamma + Frac(p, q * qtot);
        std::vector<PathTerm> path2 = path;
        path2.push_back({g2, c});
        node(next, static_cast<long>(cl.mult), false, path2, g2, qtot * q);
      }
    }
  }
};

bool short_leaf(const Leaf& l, std::size_t offset, std::size_t want) {
  return l.next.has_value() && l.terms.size() + offset < want;
}

constexpr int kMaxDeepen = 7;

// Dense grid with mag tracking used for Y^j products.
struct Dense {
  long rows = 0, cols = 0;
  std::vector<Cell> cell;
  Dense(long r, long c) : rows(r), cols(c), cell(static_cast<std::size_t>(r * c)) {}
  Cell& at(long h, long j) { return cell[static_cast<std::size_t>(h * cols + j)]; }
  const Cell& at(long h, long j) const { return cell[static_cast<std::size_t>(h * cols + j)]; }
};

Dense mul(const Dense& a, const Dense& b) {
  Dense r(a.rows + b.rows - 1, a.cols + b.cols - 1);
  for (long h = 0; h < a.rows; ++h)
    for (long j = 0; j < a.cols; ++j) {
      const Cell& x = a.at(h, j);
      if (x.mag == 0) continue;
      for (long h2 = 0; h2 < b.rows; ++h2)
        for (long j2 = 0; j2 < b.cols; ++j2) {
          const Cell& y = b.at(h2, j2);
          if (y.mag == 0) continue;
          Cell& z = r.at(h + h2, j + j2);
          z.v += x.v * y.v;
          z.mag += x.mag * y.mag;
        }
    }
  return r;
}

// t^{m d} h(t^{-m}, t^{-m} Y) with Y = sum_k base[k] t^k + t^n w, as a dense
// grid in (t, w).
Dense param_grid(const Polynomial& h, unsigned m, const std::vector<Complex>& base, unsigned n, Real drop_tol) {
  long d = h.degree();
  long yrows = static_cast<long>(std::max<std::size_t>(base.size(), n + 1));
  Dense y(yrows, 2);
  for (std::size_t k = 0; k < base.size(); ++k)
    if (base[k] != Complex(0)) y.at(static_cast<long>(k), 0) = {base[k], std::abs(base[k])};
  y.at(n, 1) = {Complex(1), 1};

  long total_rows = static_cast<long>(m) * d + d * (yrows - 1) + 1;
  Dense out(total_rows, d + 1);
  Dense pw(1, 1);
  pw.at(0, 0) = {Complex(1), 1};
  for (long j = 0; j <= d; ++j) {
    if (j > 0) pw = mul(pw, y);
    for (const auto& t : h.terms()) {
      if (static_cast<long>(t.mono.y) != j) continue;
      long shift = static_cast<long>(m) * (d - static_cast<long>(t.mono.x) - j);
      Complex a = to_cx(t.coef);
      for (long r = 0; r < pw.rows; ++r)
        for (long c = 0; c < pw.cols; ++c) {
          const Cell& src = pw.at(r, c);
          if (src.mag == 0) continue;
          Cell& dst = out.at(r + shift, c);
          dst.v += a * src.v;
          dst.mag += std::abs(a) * src.mag;
        }
    }
  }
  for (auto& c : out.cell)
    if (std::abs(c.v) <= drop_tol * c.mag) c = Cell{};
  return out;
}

long first_nonzero_row(const Dense& g) {
  for (long r = 0; r < g.rows; ++r)
    for (long c = 0; c < g.cols; ++c)
      if (g.at(r, c).v != Complex(0)) return r;
  return -1;
}

std::string exp_str(Frac e) { return "x^(" + e.str() + ")"; }

}  // namespace

Complex PuiseuxSeries::coeff(Frac e) const {
  for (const auto& t : terms)
    if (t.exp == e) return t.coef;
  return 0;
}

Complex PuiseuxSeries::evaluate(Complex x_root) const {
  Complex acc = 0;
  for (const auto& t : terms) acc += t.coef * std::pow(x_root, static_cast<int>(exp_index(t.exp, ram)));
  return acc;
}

std::string PuiseuxSeries::str() const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += complex_str(t.coef) + " * " + exp_str(t.exp);
  }
  if (s.empty()) s = "0";
  if (trunc_ord) s += " + O(" + exp_str(*trunc_ord) + ")";
  return s;
}

unsigned BranchSet::total_ram() const {
  unsigned s = 0;
  for (const auto& b : branches) s += b.ram;
  return s;
}

std::string ParamSeries::str() const {
  std::string s;
  for (unsigned k = 0; k < n_phi; ++k) {
    if (coeffs[k] == Complex(0)) continue;
    s += complex_str(coeffs[k]) + " * " + exp_str(Frac(1) - Frac(k, m_phi)) + " + ";
  }
  return s + "xi * " + exp_str(theta());
}

Complex ApproxPolynomial::coeff(unsigned x, unsigned y) const {
  for (const auto& t : terms)
    if (t.x == x && t.y == y) return t.c;
  return 0;
}

std::string ApproxPolynomial::str() const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += complex_str(t.c);
    if (t.x) s += "*x^" + std::to_string(t.x);
    if (t.y) s += "*y^" + std::to_string(t.y);
  }
  return s.empty() ? "0" : s;
}

unsigned multiplicity(const PuiseuxSeries& u) {
  std::int64_t m = 1;
  for (const auto& t : u.terms) m = lcm64(m, t.exp.den());
  return static_cast<unsigned>(m);
}

PuiseuxSeries conjugate(const PuiseuxSeries& u, unsigned i) {
  if (i >= u.ram) throw std::out_of_range("conjugate index " + std::to_string(i) + " >= ram " + std::to_string(u.ram));
  PuiseuxSeries r = u;
  if (i == 0) return r;
  for (auto& t : r.terms) {
    std::int64_t k = exp_index(t.exp, u.ram) * i % u.ram;
    if (k < 0) k += u.ram;
    if (k != 0) t.coef *= std::polar(Real(1), kTwoPi * static_cast<Real>(k) / static_cast<Real>(u.ram));
  }
  return r;
}

Principal principal(const PuiseuxSeries& u) {
  auto it = std::find_if(u.terms.begin(), u.terms.end(), [](const SeriesTerm& t) { return !t.exp.is_integer(); });
  if (u.ram == 1 || it == u.terms.end()) return {u, 0};
  std::size_t pos = static_cast<std::size_t>(it - u.terms.begin());
  unsigned best = 0;
  Real best_arg = arg_0_2pi(u.terms[pos].coef);
  for (unsigned i = 1; i < u.ram; ++i) {
    Real a = arg_0_2pi(conjugate(u, i).terms[pos].coef);
    if (a < best_arg - 1e-9) {
      best = i;
      best_arg = a;
    }
  }
  return {conjugate(u, best), best};
}

BranchSet expansions_at_infinity(const Polynomial& h, const PuiseuxConfig& cfg) {
  if (h.degree() < 1) throw PuiseuxError("expansions at infinity need a polynomial of degree >= 1");
  long n = h.degree_in(Var::y);
  bool monic = n >= 1 && h.coeff({0, static_cast<unsigned>(n)}).is_one();
  for (const auto& t : h.terms()) monic = monic && (static_cast<long>(t.mono.y) < n || t.mono.x == 0);
  if (!monic)
    throw PuiseuxError("expansions at infinity need h monic in y: " + h.str());
  // y = x^E w(1/x) with E the least integer >= 1 making every row nonnegative.
  long E = 1;
  for (const auto& t : h.terms())
    if (static_cast<long>(t.mono.y) < n) {
      long d = n - static_cast<long>(t.mono.y);
      E = std::max(E, (static_cast<long>(t.mono.x) + d - 1) / d);
    }
  std::size_t want = cfg.trunc_terms ? cfg.trunc_terms : static_cast<std::size_t>(2 * h.degree() + 4);

  long cap = std::max<long>(n * E + 1, static_cast<long>(2 * want) / n + 2);
  for (int attempt = 0;; ++attempt, cap *= 2) {
    bool last = attempt == kMaxDeepen;
    // H(s, w) = s^{nE} h(1/s, w/s^E); u(x) = x^E w(1/x).
    Grid g(static_cast<std::size_t>(n + 1), cap);
    for (const auto& t : h.terms()) {
      Complex a = to_cx(t.coef);
      g.add((n - static_cast<long>(t.mono.y)) * E - static_cast<long>(t.mono.x), t.mono.y, a, std::abs(a));
    }
    Engine e{cfg, want, 0, {}};
    try {
      e.node(g, n, true, {}, Frac(0), 1);
    } catch (const TruncationError&) {
      if (last) throw;
      continue;
    }
    if (!last && std::any_of(e.leaves.begin(), e.leaves.end(), [&](const Leaf& l) { return short_leaf(l, 0, want); }))
      continue;

    BranchSet out;
    for (const auto& l : e.leaves) {
      PuiseuxSeries s;
      s.ram = static_cast<unsigned>(l.qtot);
      for (const auto& t : l.terms) s.terms.push_back({Frac(E) - t.gamma, t.c});
      if (l.next) s.trunc_ord = Frac(E) - *l.next;
      s = principal(s).series;
      for (unsigned k = 0; k < l.count; ++k) out.branches.push_back(s);
    }
    if (out.total_ram() != static_cast<unsigned>(n))
      throw PuiseuxError("branch ramifications sum to " + std::to_string(out.total_ram()) + ", expected " +
                         std::to_string(n));
    return out;
  }
}

std::optional<Frac> ord_at_infinity(const PuiseuxSeries& s, Real drop_tol) {
  for (const auto& t : s.terms) {
    if (s.trunc_ord && t.exp <= *s.trunc_ord) break;
    if (std::abs(t.coef) > drop_tol) return t.exp;
  }
  if (s.trunc_ord)
    throw TruncationError("series is indistinguishable from zero above x^(" + s.trunc_ord->str() + ")");
  return std::nullopt;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::map<Frac, Complex, std::greater<>> acc;
  for (const auto& t : a.terms) acc[t.exp] += t.coef;
  for (const auto& t : b.terms) acc[t.exp] -= t.coef;
  PuiseuxSeries r;
  r.ram = static_cast<unsigned>(lcm64(a.ram, b.ram));
  if (a.trunc_ord && b.trunc_ord)
    r.trunc_ord = std::max(*a.trunc_ord, *b.trunc_ord);
  else if (a.trunc_ord || b.trunc_ord)
    r.trunc_ord = a.trunc_ord ? a.trunc_ord : b.trunc_ord;
  for (const auto& [e, c] : acc) {
    if (r.trunc_ord && e <= *r.trunc_ord) break;
    if (c != Complex(0)) r.terms.push_back({e, c});
  }
  return r;
}

ApproxPolynomial fact1_product(const PuiseuxSeries& u, unsigned d, Real tol) {
  if (d == 0 || u.ram != d) throw PuiseuxError("fact1_product needs d equal to the ramification index");
  // An unknown term at x^e perturbs the product at most at x^(e + (d-1) top).
  Frac top = u.terms.empty() ? Frac(0) : std::max(u.terms.front().exp, Frac(0));
  Frac need = Frac(-static_cast<std::int64_t>(d - 1)) * top;
  if (u.trunc_ord && *u.trunc_ord >= need)
    throw TruncationError("series truncated at x^(" + u.trunc_ord->str() + "), need below x^(" + need.str() + ")");
  using Series = std::map<Frac, Complex, std::greater<>>;
  const Frac floor = need - top - Frac(1);
  std::vector<Series> poly{Series{{Frac(0), Complex(1)}}};  // coefficients of y^k
  for (unsigned i = 0; i < d; ++i) {
    PuiseuxSeries ui = conjugate(u, i);
    std::vector<Series> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      for (const auto& [e, c] : poly[k]) next[k + 1][e] += c;
      for (const auto& [e, c] : poly[k])
        for (const auto& t : ui.terms) {
          Frac ex = e + t.exp;
          if (ex >= floor) next[k][ex] -= c * t.coef;
        }
    }
    poly = std::move(next);
  }
  Real scale = 0;
  for (const auto& s : poly)
    for (const auto& [e, c] : s)
      if (e >= Frac(0)) scale = std::max(scale, std::abs(c));
  ApproxPolynomial out;
  for (std::size_t k = poly.size(); k-- > 0;)
    for (const auto& [e, c] : poly[k]) {
      if (e < Frac(0) || std::abs(c) <= tol * scale) continue;
      if (!e.is_integer())
        throw TruncationError("fractional term " + complex_str(c) + " * " + exp_str(e) + " does not cancel");
      out.terms.push_back({static_cast<unsigned>(e.num()), static_cast<unsigned>(k), c});
    }
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& p, const auto& q) {
    if (p.x + p.y != q.x + q.y) return p.x + p.y > q.x + q.y;
    return p.y > q.y;
  });
  return out;
}

FaceData substitute_param(const Polynomial& h, const ParamSeries& phi, const PuiseuxConfig& cfg) {
  if (h.is_zero()) throw PuiseuxError("substitute_param of the zero polynomial");
  Dense g = param_grid(h, phi.m_phi, phi.coeffs, phi.n_phi, cfg.cancel_tol);
  long r = first_nonzero_row(g);
  if (r < 0) throw PuiseuxError("h vanishes identically along phi");
  FaceData f;
  f.a = static_cast<long>(phi.m_phi) * h.degree() - r;
  std::vector<Complex> c(static_cast<std::size_t>(g.cols));
  for (long j = 0; j < g.cols; ++j) c[static_cast<std::size_t>(j)] = g.at(r, j).v;
  f.face_poly = CPoly(std::move(c)).trimmed();
  f.tail_bound = Frac(f.a - 1, phi.m_phi);
  return f;
}

PuiseuxSeries lift_simple_root(const Polynomial& h, const ParamSeries& phi, Complex c, const PuiseuxConfig& cfg) {
  FaceData face = substitute_param(h, phi, cfg);
  CPoly dface = face.face_poly.derivative();
  Real scale = std::max<Real>(dface.abs_eval(std::abs(c)), std::numeric_limits<Real>::min());
  if (std::abs(dface(c)) < cfg.simple_tol * scale)
    throw PuiseuxError(complex_str(c) + " is not a simple root of " + face.face_poly.str());

  unsigned m = phi.m_phi, n = phi.n_phi;
  std::vector<Complex> base = phi.coeffs;
  base.push_back(c);
  Dense full = param_grid(h, m, base, n, cfg.cancel_tol);
  long r0 = first_nonzero_row(full);
  if (r0 < 0) r0 = full.rows;  // h(x, phi(x, c + w)) vanishes at w = 0 identically

  std::size_t prefix = 0;
  for (const auto& v : phi.coeffs)
    if (std::abs(v) > cfg.drop_tol) ++prefix;
  if (std::abs(c) > cfg.drop_tol) ++prefix;
  std::size_t want = cfg.trunc_terms ? cfg.trunc_terms : static_cast<std::size_t>(2 * h.degree() + 4);

  long cap = std::max<long>(static_cast<long>(m) * 4, static_cast<long>(2 * want));
  for (int attempt = 0;; ++attempt, cap *= 2) {
    bool last = attempt == kMaxDeepen;
    Grid g(static_cast<std::size_t>(full.cols), cap);
    for (long row = r0; row < full.rows; ++row)
      for (long j = 0; j < full.cols; ++j) {
        const Cell& cell = full.at(row, j);
        if (cell.v != Complex(0)) g.add(row - r0, static_cast<std::size_t>(j), cell.v, cell.mag);
      }
    if (full.cols < 2 || g.col[1].empty() || g.col[1][0].v == Complex(0))
      throw PuiseuxError("lift_simple_root: linear term vanishes; root is not simple");
    Engine e{cfg, want, prefix, {}};
    try {
      e.node(g, 1, false, {}, Frac(0), 1);
    } catch (const TruncationError&) {
      if (last) throw;
      continue;
    }
    if (!last && std::any_of(e.leaves.begin(), e.leaves.end(), [&](const Leaf& l) { return short_leaf(l, prefix, want); }))
      continue;
    if (e.leaves.size() != 1) throw PuiseuxError("simple root lifted to several branches");
    const Leaf& l = e.leaves.front();

    PuiseuxSeries u;
    for (unsigned k = 0; k < n; ++k)
      if (std::abs(phi.coeffs[k]) > cfg.drop_tol) u.terms.push_back({Frac(1) - Frac(k, m), phi.coeffs[k]});
    if (std::abs(c) > cfg.drop_tol) u.terms.push_back({phi.theta(), c});
    // t = x^{-1/m}; t^gamma = x^{-gamma/m}.
    for (const auto& t : l.terms) u.terms.push_back({phi.theta() - t.gamma / Frac(m), t.c});
    if (l.next) u.trunc_ord = phi.theta() - *l.next / Frac(m);
    u.ram = multiplicity(u);
    return u;
  }
}

namespace {

// Leading term of phi(x, xi) - s: a constant times x^e for e > theta, or
// (xi - s_theta) x^theta.
struct FactorLead {
  Frac exp;
  bool at_theta;
  Complex value;  // the constant, or s_theta when at_theta
};

FactorLead factor_lead(const ParamSeries& phi, const PuiseuxSeries& s, Real drop_tol) {
  Frac theta = phi.theta();
  std::map<Frac, std::pair<Complex, Complex>, std::greater<>> merged;
  for (unsigned k = 0; k < phi.n_phi; ++k)
    if (phi.coeffs[k] != Complex(0)) merged[Frac(1) - Frac(k, phi.m_phi)].first = phi.coeffs[k];
  for (const auto& t : s.terms)
    if (t.exp > theta) merged[t.exp].second = t.coef;
  for (const auto& [e, ab] : merged) {
    if (s.trunc_ord && e <= *s.trunc_ord)
      throw TruncationError("branch unknown at x^(" + e.str() + ") while forming a face polynomial");
    Real scale = std::max<Real>({Real(1), std::abs(ab.first), std::abs(ab.second)});
    if (std::abs(ab.first - ab.second) > drop_tol * scale) return {e, false, ab.first - ab.second};
  }
  if (s.trunc_ord && theta <= *s.trunc_ord)
    throw TruncationError("branch unknown at theta = " + theta.str());
  return {theta, true, s.coeff(theta)};
}

}  // namespace

FaceData face_from_branches(const BranchSet& b, Complex lead, const ParamSeries& phi, Real drop_tol) {
  if (b.branches.empty()) throw PuiseuxError("face_from_branches needs at least one branch");
  CPoly face(std::vector<Complex>{lead});
  Frac total(0);
  for (const auto& br : b.branches)
    for (unsigned i = 0; i < br.ram; ++i) {
      FactorLead f = factor_lead(phi, conjugate(br, i), drop_tol);
      total = total + f.exp;
      face = f.at_theta ? face * CPoly(std::vector<Complex>{-f.value, Complex(1)}) : f.value * face;
    }
  Frac a = total * Frac(phi.m_phi);
  if (!a.is_integer()) throw PuiseuxError("face exponent " + total.str() + " is off the grid 1/" + std::to_string(phi.m_phi));
  FaceData out;
  out.a = static_cast<long>(a.num());
  Real top = 0;
  for (auto v : face.c) top = std::max(top, std::abs(v));
  const Real floor = 64 * std::numeric_limits<Real>::epsilon() * top * static_cast<Real>(face.c.size());
  for (auto& v : face.c)  // parts below the product's rounding floor are zero
    v = Complex(std::abs(v.real()) <= floor ? 0 : v.real(), std::abs(v.imag()) <= floor ? 0 : v.imag());
  out.face_poly = face.trimmed();
  out.tail_bound = Frac(out.a - 1, phi.m_phi);
  return out;
}

PuiseuxSeries lift_by_conjugate(const BranchSet& b, const ParamSeries& phi, Complex c, Real drop_tol) {
  std::optional<PuiseuxSeries> found;
  int hits = 0;
  for (const auto& br : b.branches)
    for (unsigned i = 0; i < br.ram; ++i) {
      PuiseuxSeries s = conjugate(br, i);
      FactorLead f = factor_lead(phi, s, drop_tol);
      if (!f.at_theta) continue;
      Real scale = std::max<Real>({Real(1), std::abs(c), std::abs(f.value)});
      if (std::abs(f.value - c) > drop_tol * scale) continue;
      ++hits;
      if (!found) found = std::move(s);
    }
  if (hits != 1)
    throw PuiseuxError(complex_str(c) + " lifts to " + std::to_string(hits) + " conjugates; expected a simple root");
  found->ram = multiplicity(*found);
  return *found;
}

ParamSeries build_phi(const PuiseuxSeries& u, Frac theta) {
  if (theta > Frac(1)) throw std::invalid_argument("theta above 1 is not an exponent of a monic branch");
  if (u.trunc_ord && theta < *u.trunc_ord)
    throw TruncationError("theta " + theta.str() + " lies below the truncation x^(" + u.trunc_ord->str() + ")");
  std::int64_t m = theta.den();
  for (const auto& t : u.terms) {
    if (t.exp > Frac(1)) throw std::invalid_argument("build_phi needs a branch with exponents <= 1");
    if (t.exp > theta) m = lcm64(m, t.exp.den());
  }
  ParamSeries phi;
  phi.m_phi = static_cast<unsigned>(m);
  Frac n = (Frac(1) - theta) * Frac(m);
  phi.n_phi = static_cast<unsigned>(n.num());
  phi.coeffs.assign(phi.n_phi, Complex(0));
  for (const auto& t : u.terms) {
    if (t.exp <= theta) continue;
    Frac k = (Frac(1) - t.exp) * Frac(m);
    phi.coeffs[static_cast<std::size_t>(k.num())] = t.coef;
  }
  return phi;
}

}  // namespace jung

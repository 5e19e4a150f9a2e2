#include <algorithm>
#include <map>

#include "jung/polynomial.hpp"

namespace jung {

Polynomial PolyKernels::mul_reference(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  std::map<Monomial, Coefficient, GrLexDescending> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Monomial m{s.mono.x + t.mono.x, s.mono.y + t.mono.y};
      acc[m] += s.coef * t.coef;
    }
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  return Polynomial(a.field(), std::move(out), Polynomial::Canonical{});
}

namespace {

// Coefficients scaled to Gaussian integers by a common denominator.
struct Integerized {
  mpz_class den = 1;
  bool complex = false;
  std::vector<Monomial> mono;
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
};

Integerized integerize(const Polynomial& p) {
  Integerized out;
  for (const auto& t : p.terms()) {
    out.den = lcm(out.den, mpz_class(t.coef.re().get_den()));
    if (!t.coef.is_real()) {
      out.complex = true;
      out.den = lcm(out.den, mpz_class(t.coef.im().get_den()));
    }
  }
  out.mono.reserve(p.size());
  out.re.reserve(p.size());
  out.im.reserve(p.size());
  for (const auto& t : p.terms()) {
    out.mono.push_back(t.mono);
    out.re.push_back(t.coef.re().get_num() * (out.den / t.coef.re().get_den()));
    out.im.push_back(t.coef.im().get_num() * (out.den / t.coef.im().get_den()));
  }
  return out;
}

// Dense accumulator over exponent grid [0..dx] x [0..dy], row-major in y.
struct Grid {
  unsigned width = 0;  // dx + 1
  unsigned height = 0;
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
  std::vector<unsigned char> touched;

  Grid(unsigned dx, unsigned dy, bool complex)
      : width(dx + 1), height(dy + 1), re(std::size_t(width) * height), touched(std::size_t(width) * height, 0) {
    if (complex) im.resize(re.size());
  }
};

// Accumulates all products landing in output row `y`.
void accumulate_row(Grid& g, unsigned y, const Integerized& a, const Integerized& b,
                    const std::vector<std::vector<std::size_t>>& b_rows) {
  bool complex = !g.im.empty();
  for (std::size_t s = 0; s < a.mono.size(); ++s) {
    unsigned ya = a.mono[s].y;
    if (ya > y || y - ya >= b_rows.size()) continue;
    for (std::size_t t : b_rows[y - ya]) {
      std::size_t idx = std::size_t(y) * g.width + a.mono[s].x + b.mono[t].x;
      g.touched[idx] = 1;
      mpz_addmul(g.re[idx].get_mpz_t(), a.re[s].get_mpz_t(), b.re[t].get_mpz_t());
      if (complex) {
        mpz_submul(g.re[idx].get_mpz_t(), a.im[s].get_mpz_t(), b.im[t].get_mpz_t());
        mpz_addmul(g.im[idx].get_mpz_t(), a.re[s].get_mpz_t(), b.im[t].get_mpz_t());
        mpz_addmul(g.im[idx].get_mpz_t(), a.im[s].get_mpz_t(), b.re[t].get_mpz_t());
      }
    }
  }
}

std::vector<std::vector<std::size_t>> rows_by_y(const Integerized& b) {
  unsigned dy = 0;
  for (const auto& m : b.mono) dy = std::max(dy, m.y);
  std::vector<std::vector<std::size_t>> rows(dy + 1);
  for (std::size_t t = 0; t < b.mono.size(); ++t) rows[b.mono[t].y].push_back(t);
  return rows;
}

std::vector<Term> collect(const Grid& g, const mpz_class& den) {
  std::vector<Term> out;
  for (unsigned y = 0; y < g.height; ++y)
    for (unsigned x = 0; x < g.width; ++x) {
      std::size_t idx = std::size_t(y) * g.width + x;
      if (!g.touched[idx]) continue;
      mpq_class re(g.re[idx], den);
      mpq_class im = g.im.empty() ? mpq_class(0) : mpq_class(g.im[idx], den);
      Coefficient c(std::move(re), std::move(im));
      if (!c.is_zero()) out.push_back({{x, y}, std::move(c)});
    }
  std::sort(out.begin(), out.end(), [](const Term& s, const Term& t) { return GrLexDescending{}(s.mono, t.mono); });
  return out;
}

constexpr std::size_t kMaxGridCells = std::size_t(1) << 22;

template <bool Parallel>
std::vector<Term> mul_grid(const Polynomial& a, const Polynomial& b) {
  unsigned dx = a.degree_in(Var::x) + b.degree_in(Var::x);
  unsigned dy = a.degree_in(Var::y) + b.degree_in(Var::y);
  if (std::size_t(dx + 1) * (dy + 1) > kMaxGridCells) {
    Polynomial r = PolyKernels::mul_reference(a, b);
    return {r.terms().begin(), r.terms().end()};
  }
  Integerized ia = integerize(a), ib = integerize(b);
  Grid g(dx, dy, ia.complex || ib.complex);
  auto b_rows = rows_by_y(ib);
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long y = 0; y <= static_cast<long>(dy); ++y) accumulate_row(g, static_cast<unsigned>(y), ia, ib, b_rows);
  } else {
    for (unsigned y = 0; y <= dy; ++y) accumulate_row(g, y, ia, ib, b_rows);
  }
  return collect(g, ia.den * ib.den);
}

}  // namespace

Polynomial PolyKernels::mul_dense(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return Polynomial(a.field(), mul_grid<false>(a, b), Polynomial::Canonical{});
}

Polynomial PolyKernels::mul_parallel(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return Polynomial(a.field(), mul_grid<true>(a, b), Polynomial::Canonical{});
}

}  // namespace jung

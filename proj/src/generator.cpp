#include "jung/generator.hpp"

#include <random>
#include <stdexcept>

namespace jung {

namespace {

// Bounded draws by rejection on raw 64-bit output, so sequences do not depend
// on the standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = rng_();
    while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  Coefficient rational(long bound, bool nonzero) {
    long num;
    do num = range(-bound, bound);
    while (nonzero && num == 0);
    return Coefficient::from_fraction(num, range(1, bound));
  }

  Coefficient coefficient(long bound, Field f, bool nonzero) {
    if (f == Field::rational) return rational(bound, nonzero);
    Coefficient c;
    do {
      mpq_class re = rational(bound, false).re();
      mpq_class im = rational(bound, false).re();
      c = Coefficient(re, im);
    } while (nonzero && c.is_zero());
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

unsigned worst_case_degree(const GenConfig& cfg) {
  unsigned tri = (cfg.depth + 1) / 2;
  unsigned long long d = 1;
  for (unsigned k = 0; k < tri; ++k) {
    d *= cfg.max_tri_degree;
    if (d > (1ull << 31)) break;
  }
  return static_cast<unsigned>(std::min<unsigned long long>(d, 1ull << 31));
}

Generated random_tame(const GenConfig& cfg) {
  if (cfg.depth < 1) throw std::invalid_argument("generator depth must be >= 1");
  if (cfg.max_tri_degree < 2) throw std::invalid_argument("generator max_tri_degree must be >= 2");
  if (cfg.coeff_bound < 1) throw std::invalid_argument("generator coeff_bound must be >= 1");
  if (worst_case_degree(cfg) > cfg.max_degree)
    throw std::invalid_argument("worst-case degree " + std::to_string(worst_case_degree(cfg)) + " exceeds " +
                                std::to_string(cfg.max_degree));
  Draw draw(cfg.seed);
  long b = cfg.coeff_bound;
  Decomposition truth{cfg.field, {}};
  for (unsigned k = 0; k < cfg.depth; ++k) {
    if (k % 2 == 0) {
      bool x_axis = draw.range(0, 1) == 0;
      unsigned deg = static_cast<unsigned>(draw.range(2, cfg.max_tri_degree));
      std::vector<Term> terms;
      for (unsigned e = 2; e <= deg; ++e) {
        Coefficient c = draw.coefficient(b, cfg.field, e == deg);
        terms.push_back({x_axis ? Monomial{0, e} : Monomial{e, 0}, c});
      }
      Polynomial p(cfg.field, std::move(terms));
      if (x_axis)
        truth.factors.push_back(TriangularX{std::move(p)});
      else
        truth.factors.push_back(TriangularY{std::move(p)});
    } else {
      Affine a;
      do {
        a.a = draw.coefficient(b, cfg.field, false);
        a.b = draw.coefficient(b, cfg.field, false);
        a.c = draw.coefficient(b, cfg.field, false);
        a.d = draw.coefficient(b, cfg.field, false);
      } while (a.det().is_zero());
      a.e = draw.coefficient(b, cfg.field, false);
      a.f = draw.coefficient(b, cfg.field, false);
      truth.factors.push_back(a);
    }
  }
  return {recompose(truth), std::move(truth)};
}

}  // namespace jung

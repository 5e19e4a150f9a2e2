#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jung/cpoly.hpp"
#include "jung/frac.hpp"
#include "jung/polynomial.hpp"

namespace jung {

class PuiseuxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested quantity lies below the known part of a truncated series.
class TruncationError : public PuiseuxError {
 public:
  using PuiseuxError::PuiseuxError;
};

struct SeriesTerm {
  Frac exp;
  Complex coef;
};

/// y = u(x^{1/ram}) at x -> infinity. Terms have strictly descending exponents
/// and nonzero coefficients. Every coefficient with exponent > trunc_ord is
/// known; trunc_ord is empty when the series is exact (finite).
struct PuiseuxSeries {
  unsigned ram = 1;
  std::vector<SeriesTerm> terms;
  std::optional<Frac> trunc_ord;

  Complex coeff(Frac e) const;
  Complex evaluate(Complex x_root) const;  // x_root is the chosen x^{1/ram}
  // "c * x^(p/q)" terms joined by " + ", then "+ O(x^(t))" when truncated.
  std::string str() const;
};

/// One representative per conjugacy class; the class of u has u.ram members.
struct BranchSet {
  std::vector<PuiseuxSeries> branches;
  unsigned total_ram() const;
};

/// phi(x, xi) = sum_{k<n} c_k x^{1-k/m} + xi x^{1-n/m}.
struct ParamSeries {
  unsigned m_phi = 1;
  unsigned n_phi = 0;
  std::vector<Complex> coeffs;  // size n_phi

  Frac theta() const { return Frac(1) - Frac(n_phi, m_phi); }
  std::string str() const;
};

/// h(x, phi(x, xi)) = x^{a/m} (face_poly(xi) + terms of exponent <= tail_bound).
struct FaceData {
  long a = 0;
  CPoly face_poly;
  Frac tail_bound;
};

struct PuiseuxConfig {
  Real drop_tol = 1e-10;  // series coefficients and coefficient differences
  // Zero test for intermediate sums relative to the sum of the absolute
  // values of their contributions. Tied to the working precision.
  Real cancel_tol = sizeof(Real) > sizeof(double) ? Real(1e-13) : Real(1e-10);
  Real simple_tol = 1e-8;
  RootOptions roots;
  unsigned trunc_terms = 0;  // 0 selects 2*deg + 4
};

/// Complex bivariate polynomial, used for Fact-1 reconstruction.
struct ApproxPolynomial {
  struct Entry {
    unsigned x, y;
    Complex c;
  };
  std::vector<Entry> terms;

  Complex coeff(unsigned x, unsigned y) const;
  std::string str() const;
};

// All branches at infinity of h = 0. h must be monic in y (the y^deg_y
// coefficient is 1). Throws PuiseuxError on bad input and RootFindingError
// when a face polynomial defeats the root finder.
BranchSet expansions_at_infinity(const Polynomial& h, const PuiseuxConfig& cfg = {});

// lcm of exponent denominators.
unsigned multiplicity(const PuiseuxSeries& u);

// x^{1/ram} -> eps^i x^{1/ram}, eps = exp(2 pi i / ram).
PuiseuxSeries conjugate(const PuiseuxSeries& u, unsigned i);

// The conjugate whose first coefficient at a non-integer exponent has the
// least argument in [0, 2 pi). The returned index satisfies
// conjugate(u, index) == principal.
struct Principal {
  PuiseuxSeries series;
  unsigned index;
};
Principal principal(const PuiseuxSeries& u);

// prod_{i<d} (y - conjugate(u, i)), keeping exponents >= 0. u must be known
// below x^(-(d-1) e) for its leading exponent e. Throws TruncationError when
// u is too short or a fractional term survives
// (relative to `tol`).
ApproxPolynomial fact1_product(const PuiseuxSeries& u, unsigned d, Real tol = 1e-8);

FaceData substitute_param(const Polynomial& h, const ParamSeries& phi, const PuiseuxConfig& cfg = {});

// The expansion phi(x, c + lower terms) of a root of h. Throws PuiseuxError
// when c is not a simple root of the face polynomial.
PuiseuxSeries lift_simple_root(const Polynomial& h, const ParamSeries& phi, Complex c,
                               const PuiseuxConfig& cfg = {});

// h(x, phi(x, xi)) from the factorization h = lead * prod (y - s_i) over all
// conjugates s_i of all branches. No cancellation occurs, so this is the
// numerically stable route to the face polynomial. Throws TruncationError when
// some branch is not known down to theta.
FaceData face_from_branches(const BranchSet& b, Complex lead, const ParamSeries& phi, Real drop_tol = 1e-10);

// The conjugate s_i of a branch in b with s_i = phi(x, xi_i(x)) and
// xi_i(x) -> c. Throws PuiseuxError unless exactly one conjugate qualifies,
// i.e. unless c is a simple root of the face polynomial.
PuiseuxSeries lift_by_conjugate(const BranchSet& b, const ParamSeries& phi, Complex c, Real drop_tol = 1e-10);

// Largest exponent with |coef| > drop_tol; empty for the exact zero series.
// Throws TruncationError when no such term lies above trunc_ord.
std::optional<Frac> ord_at_infinity(const PuiseuxSeries& s, Real drop_tol = 1e-10);

// Termwise difference; trunc_ord is the larger of the two and terms at or
// below it are dropped.
PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);

// u must have no exponent above 1. Keeps the terms with exponent > theta and puts the parameter at theta, on
// the coarsest grid containing both.
ParamSeries build_phi(const PuiseuxSeries& u, Frac theta);

}  // namespace jung

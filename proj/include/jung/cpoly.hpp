#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jung {

#ifdef JUNG_EXTENDED_PRECISION
using Real = long double;
#else
using Real = double;
#endif
using Complex = std::complex<Real>;

/// Dense univariate polynomial with complex floating coefficients, ascending.
struct CPoly {
  std::vector<Complex> c;

  CPoly() = default;
  explicit CPoly(std::vector<Complex> coeffs) : c(std::move(coeffs)) {}

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  Complex operator()(Complex z) const;
  // sum |c_k| |z|^k, the natural scale of |p(z)|
  Real abs_eval(Real r) const;
  CPoly derivative() const;
  CPoly trimmed() const;
  // Coefficients of p(z + t) in t.
  CPoly taylor_shift(Complex z) const;

  std::string str(const std::string& var = "xi") const;

  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(Complex s, const CPoly& a);
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, CPoly poly) : std::runtime_error(what), poly_(std::move(poly)) {}
  const CPoly& poly() const { return poly_; }

 private:
  CPoly poly_;
};

struct RootOptions {
  int max_iter = 200;
  Real root_tol = 1e-12;     // backward error relative to coefficient scale
  Real cluster_tol = 1e-7;   // Taylor-defect bound accepting a multiple root
};

// All complex roots with multiplicity by simultaneous (Aberth-Ehrlich)
// iteration. Throws RootFindingError on non-convergence.
std::vector<Complex> aberth_roots(const CPoly& p, const RootOptions& opt = {});

struct RootCluster {
  Complex z;
  unsigned mult;
};

// Distinct roots with multiplicities. Nearby approximations are merged when the
// Taylor expansion at their centre vanishes to the cluster's order.
std::vector<RootCluster> root_clusters(const CPoly& p, const RootOptions& opt = {});

// Relative size of the first `r` Taylor coefficients of p at z, measured at
// radius rho: max_{k<r} |b_k| rho^k / max_k |b_k| rho^k.
Real multiplicity_defect(const CPoly& p, Complex z, unsigned r, Real rho);

std::string complex_str(Complex z);

}  // namespace jung

#pragma once

#include <compare>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "jung/coefficient.hpp"

namespace jung {

enum class Var { x, y };

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned total() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic with y before x: higher total degree first, then higher
// y exponent. Terms are stored in this order.
struct GrLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.y > b.y;
  }
};

struct Term {
  Monomial mono;
  Coefficient coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse exact polynomial in C[x,y] restricted to Q or Q(i) coefficients.
/// Immutable in practice: every operation returns a new canonical value.
class Polynomial {
 public:
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  explicit Polynomial(Field field = Field::rational) : field_(field) {}
  // Merges duplicates, drops zeros and sorts. Throws std::invalid_argument if a
  // rational-mode polynomial receives a non-real coefficient.
  Polynomial(Field field, std::vector<Term> terms);

  static Polynomial constant(const Coefficient& c, Field field = Field::rational);
  static Polynomial variable(Var v, Field field = Field::rational);
  static Polynomial monomial(const Coefficient& c, Monomial m, Field field = Field::rational);

  Field field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total() == 0); }

  int degree() const { return terms_.empty() ? kMinusInfinity : static_cast<int>(terms_.front().mono.total()); }
  unsigned degree_in(Var v) const;
  Coefficient coeff(Monomial m) const;
  Coefficient constant_term() const { return coeff({0, 0}); }
  // Nonzero only in the given variable (constants included).
  bool is_univariate_in(Var v) const;

  Polynomial leading_form() const;  // throws std::invalid_argument on zero
  Polynomial partial(Var v) const;
  Polynomial pow(unsigned k) const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial with_field(Field f) const;

  Coefficient evaluate(const Coefficient& x, const Coefficient& y) const;
  // this(xs, ys)
  Polynomial substitute(const Polynomial& xs, const Polynomial& ys) const;

  // Canonical text, e.g. "y^2 + x", "-3/2*x*y + 1".
  std::string str() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& p) { return p.scaled(c); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  struct Canonical {};
  Polynomial(Field field, std::vector<Term> terms, Canonical) : field_(field), terms_(std::move(terms)) {}
  friend struct PolyKernels;

  Field field_;
  std::vector<Term> terms_;
};

void require_same_field(const Polynomial& a, const Polynomial& b);

/// Multiplication kernels. `reference` is the plain ordered-map product kept
/// for cross-checking; `dense` accumulates integerized coefficients on a dense
/// exponent grid; `parallel` is `dense` with OpenMP over output y-rows.
struct PolyKernels {
  static Polynomial mul_reference(const Polynomial& a, const Polynomial& b);
  static Polynomial mul_dense(const Polynomial& a, const Polynomial& b);
  static Polynomial mul_parallel(const Polynomial& a, const Polynomial& b);
};

/// An ordered pair (P, Q) describing the map (x, y) -> (P(x,y), Q(x,y)).
struct PolyMap {
  Polynomial p;
  Polynomial q;

  PolyMap(Polynomial p_, Polynomial q_);
  static PolyMap identity(Field field = Field::rational);

  Field field() const { return p.field(); }
  bool is_identity() const;
  std::string str() const { return p.str() + "; " + q.str(); }
  friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

Polynomial jacobian(const PolyMap& f);
// (outer.p(inner.p, inner.q), outer.q(inner.p, inner.q))
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Coordinate change x -> x + lambda*y, y -> y followed by division of each
/// component by its y^deg coefficient.
struct LinearChange {
  unsigned lambda = 0;
  Coefficient p_scale{1};  // P was divided by this
  Coefficient q_scale{1};
};

struct Normalized {
  PolyMap map;
  LinearChange change;
};

// Both components become monic in y with deg_y equal to total degree.
// Throws std::invalid_argument on a zero component.
Normalized monic_normalize(const PolyMap& f);

}  // namespace jung

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jung/polynomial.hpp"
#include "jung/result.hpp"

namespace jung {

/// (x, y) -> (a x + b y + e, c x + d y + f), with ad - bc != 0.
struct Affine {
  Coefficient a{1}, b{0}, c{0}, d{1}, e{0}, f{0};

  static Affine identity() { return {}; }
  static Affine swap() { return {Coefficient(0), Coefficient(1), Coefficient(1), Coefficient(0), {}, {}}; }
  Coefficient det() const { return a * d - b * c; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// (x, y) -> (x + p(y), y); p has no terms of degree below 2.
struct TriangularX {
  Polynomial p;
  friend bool operator==(const TriangularX&, const TriangularX&) = default;
};

/// (x, y) -> (x, y + q(x)); q has no terms of degree below 2.
struct TriangularY {
  Polynomial q;
  friend bool operator==(const TriangularY&, const TriangularY&) = default;
};

using Factor = std::variant<Affine, TriangularX, TriangularY>;

// Throws std::invalid_argument if the factor violates its invariants.
void validate(const Factor& g);
PolyMap as_map(const Factor& g, Field field);
// g o inner
PolyMap apply_to(const Factor& g, const PolyMap& inner);
Factor inverse(const Factor& g);
Coefficient jacobian_constant(const Factor& g);
std::string describe(const Factor& g);

/// Factors in application order: [f1, ..., fn] denotes fn o ... o f1.
struct Decomposition {
  Field field = Field::rational;
  std::vector<Factor> factors;
};

enum class RejectReason {
  non_constant_jacobian,
  zero_jacobian,
  degree_not_divisible,
  leading_form_mismatch,
  singular_affine_tail,
  degenerate_component,
};

const char* reason_name(RejectReason r);

struct RejectionEvidence {
  RejectReason reason;
  std::optional<Polynomial> poly;
  std::optional<std::pair<int, int>> degrees;

  std::string str() const;
};

struct KellerCheck {
  bool keller;
  Polynomial jacobian;
};

KellerCheck is_keller(const PolyMap& f);

struct LeadingMatch {
  unsigned m;
  Coefficient c;
  friend bool operator==(const LeadingMatch&, const LeadingMatch&) = default;
};

// leading_form(big) == c * leading_form(small)^m with m = deg big / deg small.
std::optional<LeadingMatch> leading_match(const Polynomial& big, const Polynomial& small);

struct ReduceStep {
  Factor factor;
  PolyMap residual;  // factor o f
};

Result<ReduceStep, RejectionEvidence> reduce_step(const PolyMap& f);

Result<Decomposition, RejectionEvidence> decompose(const PolyMap& f);
PolyMap recompose(const Decomposition& d);
// Applies the factors of `outer` one at a time to `inner`; equals
// compose(recompose(outer), inner) without forming recompose(outer).
PolyMap apply_factors(const Decomposition& outer, const PolyMap& inner);
Decomposition inverse(const Decomposition& d);
Result<PolyMap, RejectionEvidence> invert(const PolyMap& f);

}  // namespace jung

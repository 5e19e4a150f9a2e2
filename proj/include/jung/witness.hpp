#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jung/puiseux.hpp"
#include "jung/result.hpp"
#include "jung/tame.hpp"

namespace jung {

struct ThetaResult {
  std::optional<Frac> theta;  // empty when some pair of branches coincides
  std::size_t branch_u = 0, branch_v = 0;
  unsigned i = 0, j = 0;  // conjugation indices of the minimizing pair
};

// min over all branch pairs and conjugates of ord(u_i - v_j); ties go to the
// smallest (branch_u, i, branch_v, j). Throws TruncationError when a pair
// agrees throughout the known part of both series.
ThetaResult compute_theta(const BranchSet& us, const BranchSet& vs, Real drop_tol = 1e-10);

// a P Q' - b Q P'
CPoly j_phi(const FaceData& p_face, const FaceData& q_face);

struct WitnessConfig {
  Real tol = 1e-7;  // relative
  PuiseuxConfig puiseux;
  int max_deepen = 4;
};

struct Verdict {
  std::string name;
  bool pass;
  double margin;  // the measured quantity the pass/fail decision rests on
};

struct WitnessReport {
  explicit WitnessReport(PolyMap in) : input(std::move(in)) {}

  PolyMap input;
  bool swapped = false;  // components exchanged so that deg P >= deg Q
  Normalized normalized{PolyMap::identity(), {}};
  int deg_p = 0, deg_q = 0;
  Coefficient jacobian_const;
  unsigned trunc_terms = 0;

  std::optional<PuiseuxSeries> u, v;  // after re-conjugation to the argmin pair
  unsigned sigma = 0, delta = 0;
  std::optional<Frac> theta;
  std::optional<ParamSeries> phi;
  std::optional<FaceData> p_face, q_face;
  Complex alpha_u{0}, beta_v{0};
  std::optional<CPoly> jphi;
  std::optional<PuiseuxSeries> u_bar, v_bar;  // Fact-2 lifts of alpha_u, beta_v

  std::vector<Verdict> verdicts;
  std::string failure;  // pipeline error text when a stage could not run

  bool all_pass() const;
  const Verdict* find(const std::string& name) const;
  // "degQ_divides_degP" (or "degP_divides_degQ" when the input order was swapped)
  std::string conclusion() const;
};

Result<WitnessReport, RejectionEvidence> verify_division(const PolyMap& f, const WitnessConfig& cfg = {});

}  // namespace jung

#pragma once

#include <cstdint>

#include "jung/tame.hpp"

namespace jung {

struct GenConfig {
  std::uint64_t seed = 1;
  unsigned depth = 3;           // number of factors, >= 1
  unsigned max_tri_degree = 3;  // >= 2
  unsigned coeff_bound = 3;     // |numerator| and denominator bound
  Field field = Field::rational;
  unsigned max_degree = 64;     // worst-case composed degree accepted
};

struct Generated {
  PolyMap map;
  Decomposition truth;
};

// max_tri_degree ^ (number of triangular factors)
unsigned worst_case_degree(const GenConfig& cfg);

// Factors alternate triangular (random axis) and affine, starting with a
// triangular one. Throws std::invalid_argument on an invalid config or one
// whose worst-case degree exceeds cfg.max_degree.
Generated random_tame(const GenConfig& cfg);

}  // namespace jung

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jung/polynomial.hpp"

namespace jung {

/// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// poly := term (('+'|'-') term)*, with an optional leading sign
// term := factor ('*'? factor)*
// factor := base ('^' nat)?
// base := rational | 'i' (gaussian mode) | 'x' | 'y' | '(' poly ')'
// rational := int ('/' int)?
Polynomial parse_poly(std::string_view src, Field field = Field::rational);

// "P; Q"
PolyMap parse_map(std::string_view src, Field field = Field::rational);

}  // namespace jung

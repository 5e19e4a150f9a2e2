#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jung {

/// Small exact rational used for fractional exponents. Always reduced, den > 0.
class Frac {
 public:
  constexpr Frac() = default;
  constexpr Frac(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  constexpr Frac(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("Frac with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Frac operator+(Frac a, Frac b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Frac operator-(Frac a, Frac b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Frac operator*(Frac a, Frac b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend constexpr Frac operator/(Frac a, Frac b) { return {a.num_ * b.den_, a.den_ * b.num_}; }
  constexpr Frac operator-() const { return {-num_, den_}; }

  friend constexpr bool operator==(Frac a, Frac b) = default;
  friend constexpr std::strong_ordering operator<=>(Frac a, Frac b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace jung

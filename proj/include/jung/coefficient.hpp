#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace jung {

enum class Field { rational, gaussian };

const char* field_name(Field f);

/// Exact element of Q or Q(i). The imaginary part is always zero for
/// coefficients of rational-mode polynomials.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Coefficient(mpq_class re, mpq_class im = 0);

  static Coefficient from_fraction(long num, long den);
  static Coefficient imaginary_unit();

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  // Sign convention for rendering: negative when re < 0, or re == 0 and im < 0.
  bool is_negative() const;

  Coefficient conj() const { return Coefficient(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Coefficient inverse() const;  // throws std::domain_error on zero

  std::complex<double> to_complex() const;

  // "3/2", "-1", "1/2+3*i", "-i"
  std::string str() const;
  // JSON form: always "num/den" per part, e.g. "3/1", "1/2-1/3*i"
  std::string exact_str() const;

  Coefficient operator-() const { return Coefficient(-re_, -im_); }
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_;
  mpq_class im_;
};

Coefficient pow(const Coefficient& c, unsigned k);

std::string exact_str(const mpq_class& q);

}  // namespace jung

#include "jung/coefficient.hpp"

#include <stdexcept>

namespace jung {

const char* field_name(Field f) { return f == Field::rational ? "q" : "qi"; }

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient Coefficient::from_fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Coefficient(mpq_class(num, den));
}

Coefficient Coefficient::imaginary_unit() { return Coefficient(0, 1); }

bool Coefficient::is_negative() const {
  int s = sgn(re_);
  return s < 0 || (s == 0 && sgn(im_) < 0);
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  if (is_real()) return Coefficient(1 / re_);
  mpq_class n = norm();
  return Coefficient(re_ / n, -im_ / n);
}

std::complex<double> Coefficient::to_complex() const { return {re_.get_d(), im_.get_d()}; }

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) { return *this *= o.inverse(); }

Coefficient pow(const Coefficient& c, unsigned k) {
  Coefficient r(1), b = c;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string exact_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Coefficient::str() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

std::string Coefficient::exact_str() const {
  if (is_real()) return jung::exact_str(re_);
  if (sgn(im_) < 0) return jung::exact_str(re_) + "-" + jung::exact_str(-im_) + "*i";
  return jung::exact_str(re_) + "+" + jung::exact_str(im_) + "*i";
}

}  // namespace jung

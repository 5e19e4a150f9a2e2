#include "jung/parser.hpp"

#include <cctype>

namespace jung {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view src, Field field, std::size_t offset) : src_(src), field_(field), offset_(offset) {}

  Polynomial parse() {
    Polynomial p = poly();
    skip();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool starts_base(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'i' || c == '(';
  }

  Polynomial poly() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = src_[pos_] == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      bool minus = src_[pos_] == '-';
      ++pos_;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_base(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      unsigned long e = natural("exponent");
      if (e > kMaxExponent) throw ParseError(offset_ + at, "exponent exceeds " + std::to_string(kMaxExponent));
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  unsigned long natural(const char* what) {
    skip();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail(std::string("expected ") + what);
    unsigned long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      if (v > (1ul << 40)) fail(std::string(what) + " too large");
      ++pos_;
    }
    return v;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected denominator");
        den = integer();
        if (den == 0) throw ParseError(offset_ + at, "division by zero");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return Polynomial::constant(Coefficient(q), field_);
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return Polynomial::variable(c == 'x' ? Var::x : Var::y, field_);
    }
    if (c == 'i') {
      if (field_ != Field::gaussian) fail("imaginary unit 'i' needs the gaussian field (--field qi)");
      ++pos_;
      return Polynomial::constant(Coefficient::imaginary_unit(), field_);
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = poly();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  Field field_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, Field field) { return Parser(src, field, 0).parse(); }

PolyMap parse_map(std::string_view src, Field field) {
  std::size_t semi = src.find(';');
  if (semi == std::string_view::npos) throw ParseError(src.size(), "expected ';' separating the two components");
  if (src.find(';', semi + 1) != std::string_view::npos)
    throw ParseError(src.find(';', semi + 1), "a map has exactly two components");
  Polynomial p = Parser(src.substr(0, semi), field, 0).parse();
  Polynomial q = Parser(src.substr(semi + 1), field, semi + 1).parse();
  return {std::move(p), std::move(q)};
}

}  // namespace jung

#include "jung/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jung {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mode mismatch");
}

Polynomial::Polynomial(Field field, std::vector<Term> terms) : field_(field) {
  std::map<Monomial, Coefficient, GrLexDescending> acc;
  for (auto& t : terms) {
    if (field == Field::rational && !t.coef.is_real())
      throw std::invalid_argument("imaginary coefficient in rational field mode");
    auto [it, inserted] = acc.try_emplace(t.mono, t.coef);
    if (!inserted) it->second += t.coef;
  }
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms_.push_back({m, c});
}

Polynomial Polynomial::constant(const Coefficient& c, Field field) { return monomial(c, {0, 0}, field); }

Polynomial Polynomial::variable(Var v, Field field) {
  return monomial(Coefficient(1), v == Var::x ? Monomial{1, 0} : Monomial{0, 1}, field);
}

Polynomial Polynomial::monomial(const Coefficient& c, Monomial m, Field field) {
  return Polynomial(field, std::vector<Term>{{m, c}});
}

unsigned Polynomial::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, v == Var::x ? t.mono.x : t.mono.y);
  return d;
}

Coefficient Polynomial::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return GrLexDescending{}(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Coefficient(0);
}

bool Polynomial::is_univariate_in(Var v) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return (v == Var::x ? t.mono.y : t.mono.x) == 0; });
}

Polynomial Polynomial::leading_form() const {
  if (is_zero()) throw std::invalid_argument("leading form of zero polynomial");
  std::vector<Term> top;
  unsigned d = terms_.front().mono.total();
  for (const auto& t : terms_) {
    if (t.mono.total() != d) break;
    top.push_back(t);
  }
  return Polynomial(field_, std::move(top), Canonical{});
}

Polynomial Polynomial::partial(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = v == Var::x ? t.mono.x : t.mono.y;
    if (e == 0) continue;
    Monomial m = t.mono;
    (v == Var::x ? m.x : m.y) -= 1;
    out.push_back({m, t.coef * Coefficient(static_cast<long>(e))});
  }
  return Polynomial(field_, std::move(out), Canonical{});
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(Coefficient(1), field_);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  if (field_ == Field::rational && !c.is_real())
    throw std::invalid_argument("imaginary scale in rational field mode");
  if (c.is_zero()) return Polynomial(field_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  return Polynomial(field_, std::move(out), Canonical{});
}

Polynomial Polynomial::with_field(Field f) const {
  if (f == field_) return *this;
  if (f == Field::rational)
    for (const auto& t : terms_)
      if (!t.coef.is_real()) throw std::invalid_argument("cannot demote non-real polynomial to rational mode");
  return Polynomial(f, terms_, Canonical{});
}

Coefficient Polynomial::evaluate(const Coefficient& x, const Coefficient& y) const {
  Coefficient acc(0);
  for (const auto& t : terms_) acc += t.coef * jung::pow(x, t.mono.x) * jung::pow(y, t.mono.y);
  return acc;
}

Polynomial Polynomial::substitute(const Polynomial& xs, const Polynomial& ys) const {
  require_same_field(*this, xs);
  require_same_field(*this, ys);
  if (is_zero()) return *this;
  // Horner in y over rows R_j(x): this = sum_j R_j(x) y^j.
  unsigned dy = degree_in(Var::y);
  std::vector<std::vector<const Term*>> rows(dy + 1);
  unsigned dx = 0;
  for (const auto& t : terms_) {
    rows[t.mono.y].push_back(&t);
    dx = std::max(dx, t.mono.x);
  }
  std::vector<Polynomial> xpow;
  xpow.reserve(dx + 1);
  xpow.push_back(constant(Coefficient(1), field_));
  auto row_value = [&](unsigned j) {
    Polynomial sum(field_);
    for (const Term* t : rows[j]) {
      while (xpow.size() <= t->mono.x) xpow.push_back(xpow.back() * xs);
      sum = sum + xpow[t->mono.x].scaled(t->coef);
    }
    return sum;
  };
  Polynomial acc = row_value(dy);
  for (unsigned j = dy; j-- > 0;) acc = acc * ys + row_value(j);
  return acc;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  GrLexDescending before;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && before(i->mono, j->mono))) {
      out.push_back(*i++);
    } else if (i == a.end() || before(j->mono, i->mono)) {
      out.push_back({j->mono, subtract ? -j->coef : j->coef});
      ++j;
    } else {
      Coefficient c = subtract ? i->coef - j->coef : i->coef + j->coef;
      if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_str(Monomial m) {
  std::string s;
  auto part = [&](const char* v, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part("x", m.x);
  part("y", m.y);
  return s;
}

// Renders a coefficient that is not "negative" in front of a monomial.
std::string coefficient_factor(const Coefficient& c, bool has_monomial) {
  if (has_monomial && c.is_one()) return "";
  std::string s = c.str();
  if (!c.is_real() && sgn(c.re()) != 0) s = "(" + s + ")";
  return has_monomial ? s + "*" : s;
}

}  // namespace

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = -t.coef;
  return Polynomial(field_, std::move(out), Canonical{});
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  return Polynomial(a.field_, merge(a.terms_, b.terms_, false), Polynomial::Canonical{});
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  return Polynomial(a.field_, merge(a.terms_, b.terms_, true), Polynomial::Canonical{});
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  if (a.size() * b.size() >= 4096) return PolyKernels::mul_parallel(a, b);
  return PolyKernels::mul_dense(a, b);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef.is_negative();
    Coefficient mag = neg ? -t.coef : t.coef;
    std::string mono = monomial_str(t.mono);
    std::string body = coefficient_factor(mag, !mono.empty()) + mono;
    if (first)
      s += neg ? "-" + body : body;
    else
      s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

PolyMap::PolyMap(Polynomial p_, Polynomial q_) : p(std::move(p_)), q(std::move(q_)) {
  require_same_field(p, q);
}

PolyMap PolyMap::identity(Field field) {
  return {Polynomial::variable(Var::x, field), Polynomial::variable(Var::y, field)};
}

bool PolyMap::is_identity() const { return *this == identity(field()); }

Polynomial jacobian(const PolyMap& f) {
  return f.p.partial(Var::x) * f.q.partial(Var::y) - f.p.partial(Var::y) * f.q.partial(Var::x);
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.field() != inner.field()) throw std::invalid_argument("field mode mismatch");
  return {outer.p.substitute(inner.p, inner.q), outer.q.substitute(inner.p, inner.q)};
}

namespace {

// Value of the degree-d leading form at (lambda, 1).
Coefficient leading_at(const Polynomial& lf, unsigned lambda) {
  return lf.evaluate(Coefficient(static_cast<long>(lambda)), Coefficient(1));
}

}  // namespace

Normalized monic_normalize(const PolyMap& f) {
  if (f.p.is_zero() || f.q.is_zero()) throw std::invalid_argument("monic_normalize of a zero component");
  Polynomial lp = f.p.leading_form(), lq = f.q.leading_form();
  unsigned lambda = 0;
  // Each leading form is a nonzero homogeneous polynomial, so it vanishes at
  // (t, 1) for at most deg many t.
  while (leading_at(lp, lambda).is_zero() || leading_at(lq, lambda).is_zero()) ++lambda;
  Field fld = f.field();
  Polynomial x = Polynomial::variable(Var::x, fld), y = Polynomial::variable(Var::y, fld);
  PolyMap shifted = lambda == 0 ? f : compose(f, PolyMap(x + y.scaled(Coefficient(static_cast<long>(lambda))), y));
  LinearChange change{lambda, leading_at(lp, lambda), leading_at(lq, lambda)};
  PolyMap monic(shifted.p.scaled(change.p_scale.inverse()), shifted.q.scaled(change.q_scale.inverse()));
  return {std::move(monic), std::move(change)};
}

}  // namespace jung

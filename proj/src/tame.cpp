#include "jung/tame.hpp"

#include <stdexcept>

namespace jung {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool has_low_terms(const Polynomial& p) {
  for (const auto& t : p.terms())
    if (t.mono.total() < 2) return true;
  return false;
}

// p(s) for p univariate in `v`.
Polynomial eval_univariate(const Polynomial& p, Var v, const Polynomial& s) {
  Polynomial one = Polynomial::constant(Coefficient(1), s.field());
  return v == Var::y ? p.substitute(one, s) : p.substitute(s, one);
}

Polynomial affine_part(const Coefficient& a, const Polynomial& p, const Coefficient& b, const Polynomial& q,
                       const Coefficient& shift) {
  return p.scaled(a) + q.scaled(b) + Polynomial::constant(shift, p.field());
}

}  // namespace

void validate(const Factor& g) {
  std::visit(Overloaded{
                 [](const Affine& a) {
                   if (a.det().is_zero()) throw std::invalid_argument("affine factor is singular");
                 },
                 [](const TriangularX& t) {
                   if (!t.p.is_univariate_in(Var::y) || has_low_terms(t.p))
                     throw std::invalid_argument("triangular-x factor needs p(y) with terms of degree >= 2");
                 },
                 [](const TriangularY& t) {
                   if (!t.q.is_univariate_in(Var::x) || has_low_terms(t.q))
                     throw std::invalid_argument("triangular-y factor needs q(x) with terms of degree >= 2");
                 },
             },
             g);
}

PolyMap apply_to(const Factor& g, const PolyMap& inner) {
  return std::visit(Overloaded{
                        [&](const Affine& a) {
                          return PolyMap(affine_part(a.a, inner.p, a.b, inner.q, a.e),
                                         affine_part(a.c, inner.p, a.d, inner.q, a.f));
                        },
                        [&](const TriangularX& t) {
                          return PolyMap(inner.p + eval_univariate(t.p.with_field(inner.field()), Var::y, inner.q),
                                         inner.q);
                        },
                        [&](const TriangularY& t) {
                          return PolyMap(inner.p,
                                         inner.q + eval_univariate(t.q.with_field(inner.field()), Var::x, inner.p));
                        },
                    },
                    g);
}

PolyMap as_map(const Factor& g, Field field) { return apply_to(g, PolyMap::identity(field)); }

Factor inverse(const Factor& g) {
  return std::visit(Overloaded{
                        [](const Affine& a) -> Factor {
                          Coefficient inv = a.det().inverse();
                          Affine r;
                          r.a = a.d * inv;
                          r.b = -a.b * inv;
                          r.c = -a.c * inv;
                          r.d = a.a * inv;
                          r.e = -(r.a * a.e + r.b * a.f);
                          r.f = -(r.c * a.e + r.d * a.f);
                          return r;
                        },
                        [](const TriangularX& t) -> Factor { return TriangularX{-t.p}; },
                        [](const TriangularY& t) -> Factor { return TriangularY{-t.q}; },
                    },
                    g);
}

Coefficient jacobian_constant(const Factor& g) {
  if (const auto* a = std::get_if<Affine>(&g)) return a->det();
  return Coefficient(1);
}

std::string describe(const Factor& g) {
  return std::visit(Overloaded{
                        [](const Affine& a) { return "affine (" + as_map(a, Field::gaussian).str() + ")"; },
                        [](const TriangularX& t) { return "triangular-x p(y) = " + t.p.str(); },
                        [](const TriangularY& t) { return "triangular-y q(x) = " + t.q.str(); },
                    },
                    g);
}

const char* reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::non_constant_jacobian: return "non_constant_jacobian";
    case RejectReason::zero_jacobian: return "zero_jacobian";
    case RejectReason::degree_not_divisible: return "degree_not_divisible";
    case RejectReason::leading_form_mismatch: return "leading_form_mismatch";
    case RejectReason::singular_affine_tail: return "singular_affine_tail";
    case RejectReason::degenerate_component: return "degenerate_component";
  }
  return "unknown";
}

std::string RejectionEvidence::str() const {
  std::string s = reason_name(reason);
  if (poly) s += " (" + poly->str() + ")";
  if (degrees) s += " (degrees " + std::to_string(degrees->first) + ", " + std::to_string(degrees->second) + ")";
  return s;
}

KellerCheck is_keller(const PolyMap& f) {
  Polynomial j = jacobian(f);
  return {j.is_constant() && !j.is_zero(), std::move(j)};
}

std::optional<LeadingMatch> leading_match(const Polynomial& big, const Polynomial& small) {
  int db = big.degree(), ds = small.degree();
  if (ds < 1 || db < ds) return std::nullopt;
  if (db % ds != 0) return std::nullopt;
  unsigned m = static_cast<unsigned>(db / ds);
  Polynomial lb = big.leading_form();
  Polynomial power = small.leading_form().pow(m);
  // Compare against the first monomial of the power; c is then forced.
  const Term& lead = power.terms().front();
  Coefficient c = lb.coeff(lead.mono) / lead.coef;
  if (c.is_zero() || lb != power.scaled(c)) return std::nullopt;
  return LeadingMatch{m, std::move(c)};
}

Result<ReduceStep, RejectionEvidence> reduce_step(const PolyMap& f) {
  if (f.p.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, f.p, {}};
  if (f.q.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, f.q, {}};
  int dp = f.p.degree(), dq = f.q.degree();
  bool p_big = dp >= dq;
  const Polynomial& big = p_big ? f.p : f.q;
  const Polynomial& small = p_big ? f.q : f.p;
  int db = big.degree(), ds = small.degree();
  if (db % ds != 0) return RejectionEvidence{RejectReason::degree_not_divisible, {}, std::pair{dp, dq}};
  auto match = leading_match(big, small);
  if (!match) return RejectionEvidence{RejectReason::leading_form_mismatch, big.leading_form(), std::pair{dp, dq}};

  Field fld = f.field();
  Factor g;
  if (match->m == 1) {
    Affine a;
    (p_big ? a.b : a.c) = -match->c;
    g = a;
  } else {
    Monomial mono = p_big ? Monomial{0, match->m} : Monomial{match->m, 0};
    Polynomial shift = Polynomial::monomial(-match->c, mono, fld);
    if (p_big)
      g = TriangularX{std::move(shift)};
    else
      g = TriangularY{std::move(shift)};
  }
  PolyMap residual = apply_to(g, f);
  if (residual.p.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, residual.p, {}};
  if (residual.q.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, residual.q, {}};
  return ReduceStep{std::move(g), std::move(residual)};
}

namespace {

Affine compose_affine(const Affine& outer, const Affine& inner) {
  Affine r;
  r.a = outer.a * inner.a + outer.b * inner.c;
  r.b = outer.a * inner.b + outer.b * inner.d;
  r.c = outer.c * inner.a + outer.d * inner.c;
  r.d = outer.c * inner.b + outer.d * inner.d;
  r.e = outer.a * inner.e + outer.b * inner.f + outer.e;
  r.f = outer.c * inner.e + outer.d * inner.f + outer.f;
  return r;
}

// Fuses neighbouring affine factors and neighbouring same-axis triangular
// factors; drops factors that became the identity.
std::vector<Factor> fuse(std::vector<Factor> in) {
  std::vector<Factor> out;
  for (auto& g : in) {
    if (auto* a = std::get_if<Affine>(&g); a && *a == Affine::identity()) continue;
    if (!out.empty()) {
      Factor& prev = out.back();
      if (auto* pa = std::get_if<Affine>(&prev); pa && std::holds_alternative<Affine>(g)) {
        *pa = compose_affine(std::get<Affine>(g), *pa);
        if (*pa == Affine::identity()) out.pop_back();
        continue;
      }
      if (auto* px = std::get_if<TriangularX>(&prev); px && std::holds_alternative<TriangularX>(g)) {
        px->p = px->p + std::get<TriangularX>(g).p;
        if (px->p.is_zero()) out.pop_back();
        continue;
      }
      if (auto* py = std::get_if<TriangularY>(&prev); py && std::holds_alternative<TriangularY>(g)) {
        py->q = py->q + std::get<TriangularY>(g).q;
        if (py->q.is_zero()) out.pop_back();
        continue;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

Result<Decomposition, RejectionEvidence> decompose(const PolyMap& f) {
  if (f.p.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, f.p, {}};
  if (f.q.is_constant()) return RejectionEvidence{RejectReason::degenerate_component, f.q, {}};
  KellerCheck k = is_keller(f);
  if (k.jacobian.is_zero()) return RejectionEvidence{RejectReason::zero_jacobian, k.jacobian, {}};
  if (!k.keller) return RejectionEvidence{RejectReason::non_constant_jacobian, k.jacobian, {}};

  // g_k o ... o g_1 o f = affine tail, so f = g_1^-1 o ... o g_k^-1 o tail.
  std::vector<Factor> peeled;
  PolyMap cur = f;
  int budget = f.p.degree() + f.q.degree();
  while (std::max(cur.p.degree(), cur.q.degree()) >= 2) {
    if (budget-- <= 0) throw std::logic_error("degree reduction failed to terminate");
    auto step = reduce_step(cur);
    if (!step) return step.error();
    peeled.push_back(inverse(step->factor));
    cur = step->residual;
  }
  Affine tail{cur.p.coeff({1, 0}), cur.p.coeff({0, 1}), cur.q.coeff({1, 0}),
              cur.q.coeff({0, 1}), cur.p.constant_term(), cur.q.constant_term()};
  if (tail.det().is_zero())
    return RejectionEvidence{RejectReason::singular_affine_tail, jacobian(cur), std::pair{cur.p.degree(), cur.q.degree()}};

  std::vector<Factor> factors{tail};
  factors.insert(factors.end(), std::make_move_iterator(peeled.rbegin()), std::make_move_iterator(peeled.rend()));
  Decomposition d{f.field(), fuse(std::move(factors))};
  if (d.factors.empty()) d.factors.push_back(Affine::identity());
  if (recompose(d) != f) throw std::logic_error("decomposition does not reproduce its input");
  return d;
}

PolyMap apply_factors(const Decomposition& outer, const PolyMap& inner) {
  PolyMap m = inner;
  for (const auto& g : outer.factors) m = apply_to(g, m);
  return m;
}

PolyMap recompose(const Decomposition& d) { return apply_factors(d, PolyMap::identity(d.field)); }

Decomposition inverse(const Decomposition& d) {
  Decomposition r{d.field, {}};
  r.factors.reserve(d.factors.size());
  for (auto it = d.factors.rbegin(); it != d.factors.rend(); ++it) r.factors.push_back(inverse(*it));
  return r;
}

Result<PolyMap, RejectionEvidence> invert(const PolyMap& f) {
  auto d = decompose(f);
  if (!d) return d.error();
  return recompose(inverse(*d));
}

}  // namespace jung

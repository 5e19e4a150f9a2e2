#include "jung/io.hpp"

#include <stdexcept>

#include "jung/parser.hpp"

namespace jung {

namespace {

Coefficient parse_exact(const std::string& s, Field field) {
  Polynomial p = parse_poly(s, field);
  if (!p.is_constant()) throw std::invalid_argument("expected a constant, got '" + s + "'");
  return p.constant_term();
}

}  // namespace

Json to_json(const Factor& g) {
  return std::visit(
      [](const auto& f) -> Json {
        using T = std::decay_t<decltype(f)>;
        Json j;
        if constexpr (std::is_same_v<T, Affine>) {
          j["type"] = "affine";
          j["matrix"] = Json::array({Json::array({f.a.exact_str(), f.b.exact_str()}),
                                     Json::array({f.c.exact_str(), f.d.exact_str()})});
          j["shift"] = Json::array({f.e.exact_str(), f.f.exact_str()});
        } else if constexpr (std::is_same_v<T, TriangularX>) {
          j["type"] = "triangular";
          j["axis"] = "x";
          j["poly"] = f.p.str();
        } else {
          j["type"] = "triangular";
          j["axis"] = "y";
          j["poly"] = f.q.str();
        }
        return j;
      },
      g);
}

Json to_json(const Decomposition& d) {
  Json a = Json::array();
  for (const auto& g : d.factors) a.push_back(to_json(g));
  return a;
}

Json to_json(const RejectionEvidence& r) {
  Json j;
  j["rejected"] = true;
  j["reason"] = reason_name(r.reason);
  j["poly"] = r.poly ? Json(r.poly->str()) : Json(nullptr);
  j["degrees"] = r.degrees ? Json::array({r.degrees->first, r.degrees->second}) : Json(nullptr);
  return j;
}

Json to_json(Complex z) { return Json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); }

Json to_json(Frac f) { return Json::array({f.num(), f.den()}); }

Json to_json(const PuiseuxSeries& s) {
  Json j;
  j["ram"] = s.ram;
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(Json{{"exp", to_json(t.exp)}, {"coef", to_json(t.coef)}});
  j["terms"] = std::move(terms);
  j["trunc_ord"] = s.trunc_ord ? to_json(*s.trunc_ord) : Json(nullptr);
  j["text"] = s.str();
  return j;
}

Json to_json(const ParamSeries& phi) {
  Json j;
  j["m"] = phi.m_phi;
  j["n"] = phi.n_phi;
  Json c = Json::array();
  for (auto z : phi.coeffs) c.push_back(to_json(z));
  j["coeffs"] = std::move(c);
  j["text"] = phi.str();
  return j;
}

Json to_json(const WitnessReport& rep) {
  Json j;
  j["input"] = rep.input.str();
  j["swapped"] = rep.swapped;
  j["deg_P"] = rep.deg_p;
  j["deg_Q"] = rep.deg_q;
  j["jacobian"] = rep.jacobian_const.exact_str();
  j["theta"] = rep.theta ? to_json(*rep.theta) : Json(nullptr);
  j["phi"] = rep.phi ? to_json(*rep.phi) : Json(nullptr);
  j["P_phi"] = rep.p_face ? Json(rep.p_face->face_poly.str()) : Json(nullptr);
  j["Q_phi"] = rep.q_face ? Json(rep.q_face->face_poly.str()) : Json(nullptr);
  j["a_phi"] = rep.p_face ? Json(rep.p_face->a) : Json(nullptr);
  j["b_phi"] = rep.q_face ? Json(rep.q_face->a) : Json(nullptr);
  j["m_phi"] = rep.phi ? Json(rep.phi->m_phi) : Json(nullptr);
  j["n_phi"] = rep.phi ? Json(rep.phi->n_phi) : Json(nullptr);
  j["alpha_u"] = to_json(rep.alpha_u);
  j["beta_v"] = to_json(rep.beta_v);
  Complex j0 = rep.jphi && !rep.jphi->c.empty() ? rep.jphi->c[0] : Complex(0);
  j["J_phi_const"] = to_json(j0);
  Json v, margins;
  for (const auto& verdict : rep.verdicts) {
    v[verdict.name] = verdict.pass;
    margins[verdict.name] = verdict.margin;
  }
  v["margins"] = margins.is_null() ? Json::object() : margins;
  j["verdicts"] = std::move(v);
  j["conclusion"] = rep.conclusion();
  j["u"] = rep.u ? to_json(*rep.u) : Json(nullptr);
  j["v"] = rep.v ? to_json(*rep.v) : Json(nullptr);
  j["trunc_terms"] = rep.trunc_terms;
  j["failure"] = rep.failure.empty() ? Json(nullptr) : Json(rep.failure);
  return j;
}

Json to_json(const Generated& g) {
  Json j;
  j["map"] = g.map.str();
  j["field"] = field_name(g.map.field());
  j["truth"] = to_json(g.truth);
  return j;
}

Factor factor_from_json(const Json& j, Field field) {
  std::string type = j.at("type").get<std::string>();
  if (type == "affine") {
    const Json& m = j.at("matrix");
    const Json& s = j.at("shift");
    auto c = [&](const Json& e) { return parse_exact(e.get<std::string>(), field); };
    Affine a{c(m.at(0).at(0)), c(m.at(0).at(1)), c(m.at(1).at(0)), c(m.at(1).at(1)), c(s.at(0)), c(s.at(1))};
    validate(a);
    return a;
  }
  if (type == "triangular") {
    std::string axis = j.at("axis").get<std::string>();
    Polynomial p = parse_poly(j.at("poly").get<std::string>(), field);
    Factor g = axis == "x" ? Factor(TriangularX{p}) : axis == "y" ? Factor(TriangularY{p}) : throw std::invalid_argument("axis must be x or y");
    validate(g);
    return g;
  }
  throw std::invalid_argument("unknown factor type '" + type + "'");
}

Decomposition decomposition_from_json(const Json& j, Field field) {
  if (!j.is_array()) throw std::invalid_argument("decomposition must be a JSON array");
  Decomposition d{field, {}};
  for (const auto& e : j) d.factors.push_back(factor_from_json(e, field));
  return d;
}

}  // namespace jung

#pragma once

#include <json.hpp>

#include "jung/generator.hpp"
#include "jung/puiseux.hpp"
#include "jung/tame.hpp"
#include "jung/witness.hpp"

namespace jung {

using Json = nlohmann::ordered_json;

// {"type":"affine","matrix":[[a,b],[c,d]],"shift":[e,f]} or
// {"type":"triangular","axis":"x"|"y","poly":"<canonical text>"}.
// Affine entries are exact "num/den" strings.
Json to_json(const Factor& g);
Json to_json(const Decomposition& d);  // array of factors, first applied first
Json to_json(const RejectionEvidence& r);
Json to_json(Complex z);  // [re, im]
Json to_json(Frac f);     // [num, den]
// {"ram":r,"terms":[{"exp":[p,q],"coef":[re,im]}...],"trunc_ord":[p,q]|null,"text":"..."}
Json to_json(const PuiseuxSeries& s);
Json to_json(const ParamSeries& phi);
Json to_json(const WitnessReport& rep);
Json to_json(const Generated& g);

// Inverse of to_json(Factor) / to_json(Decomposition). Throws std::invalid_argument.
Factor factor_from_json(const Json& j, Field field);
Decomposition decomposition_from_json(const Json& j, Field field);

}  // namespace jung

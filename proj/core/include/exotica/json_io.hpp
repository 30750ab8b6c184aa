#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exotica/derivation.hpp"
#include "exotica/diophantine.hpp"
#include "exotica/exotic.hpp"
#include "exotica/grading.hpp"
#include "exotica/singularities.hpp"

namespace exotica {

using Json = nlohmann::ordered_json;

/// {"x": {"a": "1/2", "b": "0"}, ...}; a bare string or integer is taken as
/// the rational part. Throws Error(kInvalidArgument) on malformed input.
WeightAssignment weights_from_json(const nlohmann::json& j);
Json to_json(const WeightAssignment& w);

/// {"x": "0", "y": "x", ...}: the image of each variable as an expression.
/// Every image is parsed over the derivation's own variable set.
Derivation derivation_from_json(const nlohmann::json& j);
Json to_json(const Derivation& d);

Json to_json(const DegreeValue& d);
Json to_json(const AbcReport& r);
Json to_json(const DavenportReport& r);
Json to_json(const DavenportWitness& w);
Json to_json(const RichnessVerdict& r);
Json to_json(const PlatonicType& p);
Json to_json(const WeightClassification& c);
Json to_json(const BrieskornClassification& c);
Json to_json(const SchmidtPredicates& p);
Json to_json(const SchmidtGap& g);
Json to_json(const ParametrizedCurve& c);
Json to_json(const CurveReport& r);
Json to_json(const FoundCurve& f);
Json to_json(const DominanceReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const FlowMap& f);
Json to_json(const LndDegree& d);

const char* to_string(QuasirationalCondition c);
const char* to_string(BrieskornCondition c);

}  // namespace exotica

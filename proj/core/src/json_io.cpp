#include "exotica/json_io.hpp"

#include "exotica/error.hpp"
#include "exotica/parser.hpp"

namespace exotica {

namespace {

Rational rational_field(const nlohmann::json& j, const std::string& what) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw Error(ErrorCode::kInvalidArgument, what + ": expected a rational as string or integer");
}

Json poly_list(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

}  // namespace

const char* to_string(QuasirationalCondition c) {
  switch (c) {
    case QuasirationalCondition::kI: return "i";
    case QuasirationalCondition::kII: return "ii";
    case QuasirationalCondition::kNone: break;
  }
  return "none";
}

const char* to_string(BrieskornCondition c) {
  switch (c) {
    case BrieskornCondition::kIPrime: return "i'";
    case BrieskornCondition::kIIPrime: return "ii'";
    case BrieskornCondition::kNone: break;
  }
  return "none";
}

WeightAssignment weights_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "weights must be a JSON object");
  std::map<std::string, DegreeValue> w;
  for (const auto& [name, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [key, _] : value.items())
        if (key != "a" && key != "b")
          throw Error(ErrorCode::kInvalidArgument, "weight of '" + name + "': unknown field '" + key + "'");
      Rational a = value.contains("a") ? rational_field(value["a"], name) : Rational(0);
      Rational b = value.contains("b") ? rational_field(value["b"], name) : Rational(0);
      w.emplace(name, DegreeValue(a, b));
    } else {
      w.emplace(name, DegreeValue(rational_field(value, name)));
    }
  }
  return WeightAssignment(std::move(w));
}

Json to_json(const DegreeValue& d) {
  return Json{{"a", rational_to_string(d.a())}, {"b", rational_to_string(d.b())}};
}

Json to_json(const WeightAssignment& w) {
  Json j = Json::object();
  for (const auto& [v, d] : w.weights()) j[v] = to_json(d);
  return j;
}

Derivation derivation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.empty())
    throw Error(ErrorCode::kInvalidArgument, "derivation must be a non-empty JSON object");
  std::vector<std::string> vars;
  for (const auto& [name, _] : j.items()) vars.push_back(name);
  std::map<std::string, Polynomial> images;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_string() && !value.is_number_integer())
      throw Error(ErrorCode::kInvalidArgument, "image of '" + name + "' must be a string");
    std::string text = value.is_string() ? value.get<std::string>() : std::to_string(value.get<long>());
    images.emplace(name, parse_polynomial(text, vars));
  }
  return Derivation(std::move(images));
}

Json to_json(const Derivation& d) {
  Json j = Json::object();
  for (const auto& [v, img] : d.images()) j[v] = img.to_string();
  return j;
}

Json to_json(const AbcReport& r) {
  return Json{{"max_deg", r.max_deg}, {"d0_abc", r.d0_abc}, {"holds", r.holds}, {"tight", r.tight}};
}

Json to_json(const DavenportReport& r) {
  return Json{{"n", r.n}, {"m", r.m}, {"k", r.k}, {"l", r.l}, {"bound", r.bound}, {"holds", r.holds}};
}

Json to_json(const DavenportWitness& w) {
  return Json{{"n", w.n},
              {"x", w.x.to_string()},
              {"y", w.y.to_string()},
              {"report", to_json(w.report)},
              {"candidates", w.candidates}};
}

Json to_json(const RichnessVerdict& r) {
  return Json{{"verdict", to_string(r.verdict)}, {"criterion", rational_to_string(r.criterion)}};
}

Json to_json(const PlatonicType& p) { return p.to_string(); }

Json to_json(const WeightClassification& c) {
  Json j{{"quasirational", c.quasirational},
         {"condition", to_string(c.condition)},
         {"rho", c.rho},
         {"primes", c.primes},
         {"pairwise", c.pairwise}};
  j["pqrs"] = c.quasirational ? Json(c.pqrs) : Json(nullptr);
  return j;
}

Json to_json(const BrieskornClassification& c) {
  return Json{{"quasirational", c.quasirational}, {"condition", to_string(c.condition)}};
}

Json to_json(const SchmidtPredicates& p) {
  return Json{{"original_hypothesis", p.original_hypothesis},
              {"quasirational", p.quasirational},
              {"sharpened", p.sharpened}};
}

Json to_json(const SchmidtGap& g) { return Json{{"m", g.m}, {"d", g.d}, {"d2_family", g.d2_family}}; }

Json to_json(const ParametrizedCurve& c) {
  return Json{{"x", c.x.to_string()}, {"y", c.y.to_string()}, {"z", c.z.to_string()}};
}

Json to_json(const CurveReport& r) {
  Json gcds = Json::array();
  for (const auto& g : r.pairwise_gcds) gcds.push_back(g.to_string());
  return Json{{"on_surface", r.on_surface},
              {"pairwise_gcds", gcds},
              {"hits_origin", r.hits_origin},
              {"diagonal", r.diagonal}};
}

Json to_json(const FoundCurve& f) {
  Json j = to_json(f.curve);
  j["hits_origin"] = f.hits_origin;
  return j;
}

Json to_json(const DominanceReport& r) {
  Json chain = Json::array();
  for (const auto& e : r.chain) chain.push_back(Json{{"label", e.label}, {"index", e.index}, {"value", e.value}});
  return Json{{"k", r.k}, {"l", r.l}, {"top", r.top}, {"max_lower", r.max_lower}, {"holds", r.holds},
              {"chain", chain}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"check", r.check}, {"pass", r.pass}, {"witness", poly_list(r.witness)}};
}

Json to_json(const FlowMap& f) {
  Json images = Json::object();
  for (const auto& [v, img] : f.images()) images[v] = img.to_string();
  return Json{{"time", f.time_variable()}, {"images", images}};
}

Json to_json(const LndDegree& d) {
  switch (d.kind) {
    case LndDegree::Kind::kNegInfinity: return "-inf";
    case LndDegree::Kind::kUnbounded: return "unbounded";
    case LndDegree::Kind::kFinite: break;
  }
  return d.value;
}

}  // namespace exotica

#include "homq/io.hpp"

namespace homq {

json field_to_json(const ScalarField& field) {
  json j = json::object();
  j["variables"] = field.variables();
  if (field.cyclotomic_order() > 0) j["cyclotomic_order"] = field.cyclotomic_order();
  return j;
}

FieldPtr field_from_json(const json& j) {
  try {
    return ScalarField::make(j.value("variables", std::vector<std::string>{}), j.value("cyclotomic_order", 0));
  } catch (const json::exception& e) {
    throw Error("malformed_json", std::string("field: ") + e.what());
  }
}

json hom_bialgebra_to_json(const HomBialgebra& H) {
  json j = json::object();
  j["field"] = field_to_json(*H.field());
  const json body = H.to_json();
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

HomBialgebraPtr hom_bialgebra_from_instance_json(const json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw Error("malformed_json", "instance needs a \"field\" object");
  FieldPtr field = field_from_json(j.at("field"));
  auto pres = std::make_shared<const Presentation>(presentation_from_json(j, field));
  return std::make_shared<const HomBialgebra>(hom_bialgebra_from_json(j, pres));
}

json cobraided_to_json(const CobraidedHomBialgebra& C) {
  json j = json::object();
  j["field"] = field_to_json(*C.H().field());
  const json body = C.to_json();
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

CobraidedPtr cobraided_from_json(const json& j) {
  HomBialgebraPtr H = hom_bialgebra_from_instance_json(j);
  if (!j.contains("R")) throw Error("malformed_json", "instance has no \"R\" table");
  CobraidingForm R = cobraiding_form_from_json(j.at("R"), H->pres());
  int power = j.value("r_power", 0);
  std::vector<bool> mask;
  if (j.contains("r_generators")) {
    mask.assign(H->pres().ngens(), false);
    for (const auto& g : j.at("r_generators")) {
      int i = H->pres().generator_index(g.get<std::string>());
      if (i < 0) throw Error("malformed_json", "r_generators names an unknown generator");
      mask[i] = true;
    }
  }
  return std::make_shared<const CobraidedHomBialgebra>(H, std::move(R), power, std::move(mask));
}

}  // namespace homq

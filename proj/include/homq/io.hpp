#pragma once

#include "homq/cobraid.hpp"

namespace homq {

// {"variables": [...], "cyclotomic_order": n}; the order is omitted over Q
json field_to_json(const ScalarField& field);
FieldPtr field_from_json(const json& j);

// Presentation + Delta/alpha tables (+ optional "R"); the field sits under "field".
json hom_bialgebra_to_json(const HomBialgebra& H);
HomBialgebraPtr hom_bialgebra_from_instance_json(const json& j);
json cobraided_to_json(const CobraidedHomBialgebra& C);
CobraidedPtr cobraided_from_json(const json& j);

}  // namespace homq

// JSON and CSV encodings. Exact coefficients are canonical rationals; the float
// approximations are for inspection only.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tdl/modular.hpp"

namespace tdl {

// {"order": N, "coeffs": ["p/q", ...], "approx": [re, im]}
nlohmann::ordered_json cyclo_to_json(const Cyclo& value);
Cyclo cyclo_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json matrix_to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json modular_data_to_json(const ModularData& md);
ModularData modular_data_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json w_matrix_to_json(const CocycleParams& params, const std::vector<std::string>& labels, const WMatrix& w);
WMatrix w_matrix_from_json(const nlohmann::ordered_json& j);

// Long-format CSV: row,col,re,im
std::string matrix_to_csv(const CycloMatrix& m, const std::vector<std::string>& labels);

}  // namespace tdl

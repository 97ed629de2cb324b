#pragma once

#include <string>

#include <json.hpp>

#include "lamina/siegel.hpp"

namespace lamina {

// ValuedScalar <-> {"terms":[[{"a":"-4","b":"4"},"32"],...],
//                   "precision": null | {"a":..,"b":..}}
nlohmann::json to_json(const ValuedScalar& x);
ValuedScalar scalar_from_json(const nlohmann::json& j, const FieldPtr& f);

nlohmann::json to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j, const FieldPtr& f);

// {"chart": [[..]]} | {"infinity": true} | {"frame": [[..]]}
nlohmann::json to_json(const Lagrangian& l);
Lagrangian lagrangian_from_json(const nlohmann::json& j, const FieldPtr& f);

// {"X": [[..]], "Y": [[..]]}
nlohmann::json to_json(const SiegelPoint& z);
SiegelPoint siegel_point_from_json(const nlohmann::json& j, const FieldPtr& f);

// compact human-readable rendering of a scalar, e.g. "32*X^(-4+4*alpha) + 18"
std::string to_string(const ValuedScalar& x);

}  // namespace lamina

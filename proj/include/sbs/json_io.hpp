#pragma once

#include <json.hpp>

#include "sbs/finite_group.hpp"
#include "sbs/irreps.hpp"
#include "sbs/point_group.hpp"

namespace sbs {

nlohmann::json to_json(const Mat3& m);  // row-major 9-element array
Mat3 mat3_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IrrepObject& obj);
IrrepObject irrep_object_from_json(const nlohmann::json& j);

// {"orientation": [9 floats], "name": token, "n": int?}
nlohmann::json to_json(const PointGroup& p);

// {"order": N, "compose": flat row-major table, "labels": [[9 floats], ...]?}
nlohmann::json finite_group_to_json(const FiniteGroup& g);
nlohmann::json matrix_group_to_json(const MatrixGroup& g);

nlohmann::json subgroup_to_json(const Subgroup& s);

}  // namespace sbs

// SPDX-License-Identifier: Apache-2.0
//
// JSON renderings of the library's reports. Field elements are written with
// FieldTower::format and read back with FieldTower::parse.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "linhull/frob.hpp"
#include "linhull/gram.hpp"
#include "linhull/pencil.hpp"
#include "linhull/rdhull.hpp"
#include "linhull/sweep.hpp"

namespace linhull {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json tower_info(const FieldTower& t);

json to_json(const FieldTower& t, const Matrix& a);
Matrix matrix_from_json(const TowerPtr& tower, const json& j);

json to_json(const FieldTower& t, const HullReport& r);
HullReport hull_report_from_json(const FieldTower& t, const json& j);

json to_json(const FieldTower& t, const FrobHullReport& r);
FrobHullReport frob_report_from_json(const FieldTower& t, const json& j);

json to_json(const FieldTower& t, const StrataTable& table);
StrataTable strata_from_json(const FieldTower& t, const json& j);

json to_json(const EbitReport& r);
json to_json(const FieldTower& t, const PencilData& p);
json to_json(const FieldTower& t, const RdHullReport& r);

/// LCD / self-orthogonal / intermediate from the code dimension and hull.
HullClass classify_hull(std::size_t code_dim, std::size_t hull);

/// One generator per line as comma-separated coefficients a_0..a_{m-1};
/// '#' starts a comment. Throws ParseError.
std::vector<QPoly> parse_generators(const TowerPtr& tower, std::string_view text);
/// Comma-separated coefficients on a single line.
QPoly parse_qpoly(const TowerPtr& tower, std::string_view text);

}  // namespace linhull

#pragma once

// JSON renderings of the library's reports. Field elements are hex strings.

#include <json.hpp>

#include "diffu/bounds.hpp"
#include "diffu/geometry.hpp"
#include "diffu/suites.hpp"
#include "diffu/uniformity.hpp"

namespace diffu::cli {

nlohmann::ordered_json field_json(const Field& field);
nlohmann::ordered_json ddt_json(const DdtReport& r, const Field& field);
nlohmann::ordered_json geometry_json(const GeometryReport& r, const Field& field);
nlohmann::ordered_json structural_json(const StructuralChecks& s);
nlohmann::ordered_json bound_json(const BoundReport& r);
nlohmann::ordered_json suite_json(const SuiteResult& r);

}  // namespace diffu::cli

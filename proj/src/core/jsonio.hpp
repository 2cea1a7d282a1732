#pragma once

#include <string>

#include <json.hpp>

#include "types.hpp"

namespace convexo::io {

// JSON text -> validated objects. Malformed documents raise SchemaError;
// violated type invariants raise InvariantError naming the invariant.
Body parse_body(const std::string& text);
SphericalMeasure parse_measure(const std::string& text);
PointMeasure parse_point_measure(const std::string& text);
MaxAffineFunction parse_max_affine(const std::string& text);
FunctionalSystem parse_functional_system(const std::string& text);

nlohmann::json body_json(const Body& b);
nlohmann::json measure_json(const SphericalMeasure& m);

std::string serialize(const Body& b);
std::string serialize(const SphericalMeasure& m);

// Serializer used for every document the toolkit emits: deterministic,
// floats at 17 significant digits.
std::string dump(const nlohmann::json& j);

}  // namespace convexo::io

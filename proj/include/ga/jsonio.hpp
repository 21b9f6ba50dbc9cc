#pragma once

#include "ga/quaternion.hpp"

#include <json.hpp>

namespace ga {

using Json = nlohmann::ordered_json;

/// A GoldenNumber serializes as the two reduced fraction strings
/// ["a_num/a_den", "b_num/b_den"] of its a + b*sqrt5 form.
Json golden_to_json(const GoldenNumber& x);
GoldenNumber golden_from_json(const Json& j);

/// Exact pair plus a float convenience field.
Json golden_to_json_with_value(const GoldenNumber& x);

Json quat_to_json(const GoldenQuaternion& q);
GoldenQuaternion quat_from_json(const Json& j);

/// Exact quaternion plus the four float values.
Json quat_to_json_with_value(const GoldenQuaternion& q);

}  // namespace ga

#pragma once

#include "quatopuc/quat.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace quatopuc::cli {

using Json = nlohmann::json;

// Deterministic text: keys sorted, two-space indent, every float printed with
// 17 significant digits, non-finite floats written as null.
std::string to_text(const Json& j);

// The float formatting used by to_text, shared with the CSV writer.
std::string format_double(double x);

Json to_json(const Quaternion& q); // [w, x, y, z]
Json to_json(Complex z);           // [re, im]
Json to_json(const SliceFrame& fr);
Json to_json(const std::vector<Quaternion>& qs);
Json to_json(const std::vector<double>& xs);

Quaternion quaternion_from_json(const Json& j);
SliceFrame frame_from_json(const Json& j);
std::vector<Quaternion> quaternions_from_json(const Json& j);

// Finite values pass through; anything else becomes null.
Json finite_or_null(double x);

} // namespace quatopuc::cli

#pragma once

#include <string>

#include <json.hpp>

#include "semiring_dp/count.hpp"

namespace sdp::cli {

using Json = nlohmann::json;

/// Rounds to 12 significant digits; infinities and NaN become strings so
/// the document stays valid JSON.
Json number_json(double x);
/// Integer when it fits in 64 bits, decimal string otherwise.
Json number_json(const Count& c);
inline Json number_json(bool b) { return b; }

/// Sorted keys, two-space indent, trailing newline. Parsing the output and
/// dumping it again reproduces it byte for byte.
std::string dump_canonical(const Json& doc);

}  // namespace sdp::cli

#pragma once

// JSON encodings of the library's value types. Rationals travel as strings.

#include "canonical24/bipoly.hpp"
#include "canonical24/branch.hpp"
#include "canonical24/unipoly.hpp"

#include "json.hpp"

#include <string>

namespace canonical24 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "canonical24/v1";

Json to_json(const BiPoly& p);
Json to_json(const UniPoly& f);
Json to_json(const BranchConfig& c);
Json to_json(const Certificate& cert);

/// The parsers throw FormatError naming the offending field, e.g. "delta2.coeffs[1][0]".
BiPoly bipoly_from_json(const Json& j, const std::string& field);
UniPoly unipoly_from_json(const Json& j, const std::string& field);
BranchConfig config_from_json(const Json& j);

/// Parses text, reporting syntax errors as FormatError.
Json parse_json_text(const std::string& text);

/// Fixed layout: two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace canonical24

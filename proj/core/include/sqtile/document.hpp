#pragma once

#include <string>
#include <string_view>

#include "sqtile/tiling.hpp"

namespace sqtile {

// Tiling documents are UTF-8 JSON:
//
//   {
//     "generators": [{"symbol": "sqrt2", "lo": "1393/985", "hi": "577/408"}],
//     "outer": {"w": "1", "h": "2 + 1*sqrt2"},
//     "tiles": [{"x": "0", "y": "0", "w": "1", "h": "1"}, ...]
//   }
//
// Rationals and expressions are always strings. lo/hi may be omitted for the
// built-in constants sqrt2, sqrt3 and sqrt5. Every symbol used in an
// expression must be declared under "generators".

/// Throws ParseError (with line/column for JSON syntax errors, the field path
/// and expression column otherwise), UndeclaredSymbol, or InvalidGenerator.
Tiling parse_document(std::string_view text);

/// Canonical form: every enclosure explicit, expressions as format() prints
/// them, two-space indentation, trailing newline.
std::string serialize_document(const Tiling& t);

}  // namespace sqtile

#pragma once

#include <string_view>

#include "sqtile/generator.hpp"
#include "sqtile/linexpr.hpp"

namespace sqtile {

// Grammar (whitespace insignificant):
//   expr     := term (('+' | '-') term)*
//   term     := rational ('*' symbol)? | symbol
//   rational := ['-'] digits ('/' digits)?
// Symbols must already be declared in `table`. Errors carry a 1-based column.
LinExpr parse_expr(std::string_view text, const GeneratorTable& table);

}  // namespace sqtile

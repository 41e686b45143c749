#pragma once

#include <string>

#include "sqtile/tiling.hpp"

namespace sqtile {

/// Renders a validated tiling as SVG, one <rect> per tile in index order after
/// the outer frame. Coordinates come from generator enclosure midpoints,
/// rounded to `precision` decimals, with the y axis pointing up. Throws
/// InvalidTiling if the tiling does not validate.
std::string render_svg(const Tiling& t, int precision = 6);

}  // namespace sqtile

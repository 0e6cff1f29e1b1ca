#pragma once

#include <string>

#include "mskit/models.hpp"

namespace mskit {

// Renders the grid as an 800x600 SVG: shaded cells where the property holds,
// hatching where it is open, breaking-line overlays with their formulas in
// the legend. Identical grids produce identical bytes.
std::string render_svg(const RegionGrid& grid, const std::string& title);

}  // namespace mskit

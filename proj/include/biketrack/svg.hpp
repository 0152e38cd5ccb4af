#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biketrack/vec2.hpp"

namespace biketrack {

struct Polyline {
    std::string label;
    std::string color;
    std::vector<Vec2> points;
};

/// Writes an SVG with one <path> element per polyline plus a text legend.
/// All curves share a single uniform scale and translation (y axis flipped
/// into screen coordinates), fitted to a 1000 x 1000 viewbox with a 5%
/// margin, so geometric relations between the curves are preserved.
void write_svg(std::ostream& out, const std::vector<Polyline>& curves);

}  // namespace biketrack

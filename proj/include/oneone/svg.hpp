#pragma once

#include "oneone/diagram.hpp"

#include <string>

namespace oneone {

/// SVG picture of a diagram: the fundamental square [-1/2, 1/2]^2 on top (alpha along its top
/// and bottom edges, z at the centre), then one strip per class showing the class line, the
/// lifted beta curve between its first and last crossing, and the bigons shaded.
/// Coordinates are printed with 6 significant digits; output depends only on the diagram.
std::string render_svg(const Diagram& d);

}  // namespace oneone

#pragma once

#include <string>

#include "fanplan/drawing.hpp"
#include "fanplan/layout.hpp"

namespace fanplan {

// Deterministic SVG 1.1 document: one path per edge, vertices as labelled
// disks, crossings left unmarked.
std::string render_svg(const Drawing& d, const LayoutResult& l);

} // namespace fanplan

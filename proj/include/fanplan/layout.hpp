#pragma once

#include "fanplan/drawing.hpp"
#include "fanplan/geometry.hpp"

namespace fanplan {

// Straight-line placement of the planarization: coordinates for every
// vertex and crossing, and per-edge polylines through the crossings.
struct LayoutResult {
    IdMap<Vec2> vertex_pos;
    IdMap<Vec2> crossing_pos;
    IdMap<Polyline> polylines;
};

// Barycentric placement per component with a deterministically chosen outer
// face (largest first, ties by smallest dart); every face is stellated so the
// solve is a triangulated disk. Retries other outer faces on degeneracy and
// throws layout_error when all fail. Components are tiled side by side and
// the whole picture is scaled into the unit square.
LayoutResult layout(const Drawing& d);

} // namespace fanplan

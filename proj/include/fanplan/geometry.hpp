#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "fanplan/drawing.hpp"
#include "fanplan/errors.hpp"

namespace fanplan {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

using Polyline = std::vector<Vec2>;

// Signals coordinates too degenerate to read a combinatorial structure from
// (touching curves, triple points, contacts at non-shared vertices). Layouts
// catch this and retry with a different outer face.
struct degenerate_geometry : error {
    using error::error;
};

// A transversal contact between two edge polylines. e1 < e2 in shortlex
// order; sign follows the Crossing convention (+1: e2 crosses e1 left to
// right with both polylines in listed direction).
struct GeoCrossing {
    Id e1, e2;
    Vec2 point;
    double param1 = 0.0, param2 = 0.0; // arclength along the polylines
    Sign sign = 1;
};

// Extracts all proper crossings between edge polylines. `shared_vertex_at`
// maps an edge pair to the coordinate of a shared endpoint, where contact is
// legal and ignored. Throws degenerate_geometry on anything non-transversal.
std::vector<GeoCrossing> extract_crossings(
    const IdMap<Polyline>& polylines,
    const std::function<std::vector<Vec2>(const Id&, const Id&)>& shared_vertex_at,
    double tol);

// Geometric input for building fixture drawings.
struct PolyEdge {
    Id tail, head;
    std::vector<Vec2> via; // interior waypoints
};

struct PolySpec {
    IdMap<Vec2> vertices;
    IdMap<std::string> labels; // optional vertex labels
    IdMap<PolyEdge> edges;
    // crossing naming hook; by default x1, x2, ... in deterministic order
    std::function<Id(int)> crossing_name;
};

// Reads the combinatorial drawing off explicit coordinates: crossings,
// per-edge orders, signs and vertex rotations. The result always passes
// validate_drawing.
Drawing from_polylines(const PolySpec& spec);

} // namespace fanplan

#pragma once

#include <variant>
#include <vector>

#include "fanplan/drawing.hpp"

namespace fanplan {

// A point where a route segment starts or ends: one of the relevant edge's
// endpoints, or a crossing on it.
struct Anchor {
    bool is_vertex;
    Id id;

    static Anchor vertex(Id v) { return {true, std::move(v)}; }
    static Anchor crossing(Id c) { return {false, std::move(c)}; }
    bool operator==(const Anchor&) const = default;
    std::string token() const { return (is_vertex ? "@" : "#") + id; }
};

// Reuse the target's old curve between two anchors, retaining the crossings
// strictly between them.
struct TailSeg {
    Anchor from, to;
};

// A new arc in a thin corridor alongside `followed` between two of its
// anchors, on the given side of its reference orientation. Acquires one
// crossing (same crossed edge, same sign, same order) for every crossing
// strictly interior to the span.
struct ShadowSeg {
    Id followed;
    Anchor from, to;
    Side side;
};

using Segment = std::variant<TailSeg, ShadowSeg>;

// Declarative description of a rerouted edge; the sole mutation mechanism.
// `removed` lists every old crossing of the target deleted by the route
// (both junction anchors the new curve does not cross, and crossings on
// replaced spans); reroute_edge cross-checks it.
struct RouteSpec {
    Id target;
    std::vector<Segment> segments;
    IdSet removed;
};

std::string describe(const RouteSpec& spec);

// Applies the route. The result differs from d only in the target's curve;
// throws route_error on a malformed route and internal_contradiction if the
// rerouted drawing fails validation (an impossible side assignment).
Drawing reroute_edge(const Drawing& d, const RouteSpec& spec);

// The removed-set the route implies; used by the engine to fill
// RouteSpec::removed before applying.
IdSet route_removed(const Drawing& d, const RouteSpec& spec);

} // namespace fanplan

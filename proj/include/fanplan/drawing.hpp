#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanplan/ids.hpp"

namespace fanplan {

struct Edge {
    Id id;
    Id tail, head; // the listed order is the edge's reference orientation

    bool operator==(const Edge&) const = default;
};

struct Graph {
    IdMap<std::string> vertices; // id -> label, "" when unlabelled
    IdMap<Edge> edges;

    bool has_vertex(const Id& v) const { return vertices.count(v) != 0; }
    bool has_edge(const Id& e) const { return edges.count(e) != 0; }

    bool operator==(const Graph&) const = default;
};

// A crossing between two distinct edges. `first` < `second` in shortlex
// order; the sign is expressed for that ordering. Positions along the edges
// are not stored, they are the indices in Drawing::seq.
struct Crossing {
    Id id;
    Id first, second;
    Sign sign;

    bool operator==(const Crossing&) const = default;
};

// One end of an edge, sitting in the rotation of the vertex it is incident
// to. at_tail == true means the vertex is the edge's tail.
struct Dart {
    Id edge;
    bool at_tail;

    Id token() const { return edge + (at_tail ? "+" : "-"); }
    bool operator==(const Dart&) const = default;
};

// Combinatorial model of a spherical topological drawing: a planarization
// given by per-edge crossing sequences plus a rotation system. Rotations at
// crossings are derived from the signs, never stored.
struct Drawing {
    Graph graph;
    IdMap<Crossing> crossings;
    IdMap<std::vector<Id>> seq; // edge -> crossing ids in reference order
    IdMap<std::vector<Dart>> rot; // vertex -> incident darts, ccw

    bool operator==(const Drawing&) const = default;

    const Edge& edge(const Id& e) const;
    const Crossing& crossing(const Id& c) const;
    const std::vector<Id>& edge_seq(const Id& e) const;

    // 1-based position of crossing c along edge e in reference orientation.
    int position(const Id& e, const Id& c) const;

    // The edge of crossing c other than e.
    const Id& other_edge(const Id& c, const Id& e) const;

    bool is_endpoint(const Id& e, const Id& v) const;
    Id other_endpoint(const Id& e, const Id& v) const;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Rotate every rot list so its shortlex-smallest dart token comes first.
// All construction paths end here, so drawings compare memberwise.
void canonicalize_rotations(Drawing& d);

// How the edge other than `base` passes through crossing c: +1 if it crosses
// base left to right with both edges in reference orientation.
Sign sign_relative_to(const Crossing& c, const Id& base);

// Side of `base` on which the other edge of c lies immediately after c in its
// own reference orientation.
Side ref_departure_side(const Crossing& c, const Id& base);

// Side of `base` on which edge t (the other edge of c) lies immediately after
// passing c when travelling t toward endpoint `toward` of t.
Side departure_side_toward(const Drawing& d, const Id& c, const Id& base, const Id& toward);

// Crossings of edge e in the order encountered when traversing e from
// endpoint `from`.
std::vector<Id> seq_from(const Drawing& d, const Id& e, const Id& from);

// Keep only `edges` (and crossings entirely among them, and the incident
// vertices). Realizes the induced subdrawings Gamma_i.
Drawing restrict_to(const Drawing& d, const IdSet& edges);

} // namespace fanplan

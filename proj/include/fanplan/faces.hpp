#pragma once

#include <tuple>
#include <vector>

#include "fanplan/drawing.hpp"

namespace fanplan {

// Node of the planarization: a graph vertex or a crossing.
struct PNode {
    bool is_vertex;
    Id id;

    bool operator==(const PNode&) const = default;
    bool operator<(const PNode& o) const {
        if (is_vertex != o.is_vertex) return is_vertex > o.is_vertex; // vertices first
        return id_less(id, o.id);
    }
    std::string token() const { return (is_vertex ? "v:" : "x:") + id; }
};

// Directed dart of the planarization: arc `arc` of edge `edge`, travelled
// forward (dir=+1, along reference orientation) or backward. Arc i of an
// edge with k crossings runs from planarization node i to node i+1, where
// node 0 is the tail and node k+1 the head.
struct PDart {
    Id edge;
    int arc;
    int dir; // +1 or -1

    bool operator==(const PDart&) const = default;
    bool operator<(const PDart& o) const {
        if (edge != o.edge) return id_less(edge, o.edge);
        if (arc != o.arc) return arc < o.arc;
        return dir < o.dir;
    }
    PDart reversed() const { return {edge, arc, -dir}; }
    std::string token() const {
        return edge + "[" + std::to_string(arc) + (dir > 0 ? "+" : "-") + "]";
    }
};

// The planarization as an explicit map: rotations at every node (ccw), with
// crossing rotations derived from signs.
struct Planarization {
    std::vector<PNode> nodes;
    std::map<PNode, std::vector<PDart>> node_rot;
    std::map<PDart, PNode> dart_source; // node the dart leaves

    int arc_count = 0;

    PNode source(const PDart& d) const { return dart_source.at(d); }
    PNode target(const PDart& d) const { return dart_source.at(d.reversed()); }

    // ccw successor of dart d in the rotation at its source node
    PDart ccw_next(const PDart& d) const;
};

Planarization planarize(const Drawing& d);

struct Face {
    std::vector<PDart> walk; // closed, face on the right of every dart
    std::string key;         // smallest dart token on the walk, for identity
};

struct FaceSet {
    std::vector<Face> faces;
    std::map<PDart, int> face_of;

    int face_index(const PDart& d) const { return face_of.at(d); }
};

// Faces of the planarization (orbits of d -> ccw_next(rev(d))), without any
// validity requirement beyond structural consistency.
FaceSet trace_faces_unchecked(const Planarization& p);

// Per connected component of the planarization: node, arc and face counts.
struct ComponentEuler {
    std::vector<PNode> nodes;
    int arcs = 0;
    int faces = 0;
    int euler() const { return static_cast<int>(nodes.size()) - arcs + faces; }
};

std::vector<ComponentEuler> component_euler(const Planarization& p, const FaceSet& f);

// Spec operation: requires validate_drawing(d).ok, throws otherwise.
FaceSet trace_faces(const Drawing& d);

} // namespace fanplan

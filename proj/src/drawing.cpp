#include "fanplan/drawing.hpp"

#include <algorithm>

#include "fanplan/errors.hpp"

namespace fanplan {

const Edge& Drawing::edge(const Id& e) const {
    auto it = graph.edges.find(e);
    if (it == graph.edges.end()) throw lookup_error("unknown edge: " + e);
    return it->second;
}

const Crossing& Drawing::crossing(const Id& c) const {
    auto it = crossings.find(c);
    if (it == crossings.end()) throw lookup_error("unknown crossing: " + c);
    return it->second;
}

const std::vector<Id>& Drawing::edge_seq(const Id& e) const {
    auto it = seq.find(e);
    if (it == seq.end()) throw lookup_error("edge without sequence: " + e);
    return it->second;
}

int Drawing::position(const Id& e, const Id& c) const {
    const auto& s = edge_seq(e);
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == c) return static_cast<int>(i) + 1;
    throw lookup_error("crossing " + c + " not on edge " + e);
}

const Id& Drawing::other_edge(const Id& c, const Id& e) const {
    const Crossing& x = crossing(c);
    if (x.first == e) return x.second;
    if (x.second == e) return x.first;
    throw lookup_error("edge " + e + " not in crossing " + c);
}

bool Drawing::is_endpoint(const Id& e, const Id& v) const {
    const Edge& ed = edge(e);
    return ed.tail == v || ed.head == v;
}

Id Drawing::other_endpoint(const Id& e, const Id& v) const {
    const Edge& ed = edge(e);
    if (ed.tail == v) return ed.head;
    if (ed.head == v) return ed.tail;
    throw lookup_error("vertex " + v + " not an endpoint of edge " + e);
}

void canonicalize_rotations(Drawing& d) {
    for (auto& [v, darts] : d.rot) {
        if (darts.size() < 2) continue;
        size_t best = 0;
        for (size_t i = 1; i < darts.size(); ++i)
            if (id_less(darts[i].token(), darts[best].token())) best = i;
        std::rotate(darts.begin(), darts.begin() + best, darts.end());
    }
}

Sign sign_relative_to(const Crossing& c, const Id& base) {
    if (c.first == base) return c.sign;
    if (c.second == base) return -c.sign;
    throw lookup_error("edge " + base + " not in crossing " + c.id);
}

Side ref_departure_side(const Crossing& c, const Id& base) {
    // sign +1: the other edge crosses base left to right, so it departs on
    // the right of base.
    return sign_relative_to(c, base) > 0 ? Side::right : Side::left;
}

Side departure_side_toward(const Drawing& d, const Id& c, const Id& base, const Id& toward) {
    const Crossing& x = d.crossing(c);
    const Id& t = d.other_edge(c, base);
    if (!d.is_endpoint(t, toward))
        throw lookup_error("vertex " + toward + " not an endpoint of edge " + t);
    Side ref_dep = ref_departure_side(x, base);
    // Travelling toward the head follows the reference orientation.
    return toward == d.edge(t).head ? ref_dep : opposite(ref_dep);
}

std::vector<Id> seq_from(const Drawing& d, const Id& e, const Id& from) {
    std::vector<Id> s = d.edge_seq(e);
    const Edge& ed = d.edge(e);
    if (from == ed.tail) return s;
    if (from != ed.head) throw lookup_error("vertex " + from + " not an endpoint of edge " + e);
    std::reverse(s.begin(), s.end());
    return s;
}

Drawing restrict_to(const Drawing& d, const IdSet& edges) {
    Drawing r;
    for (const Id& e : edges) {
        const Edge& ed = d.edge(e);
        r.graph.edges[e] = ed;
        r.graph.vertices[ed.tail] = d.graph.vertices.at(ed.tail);
        r.graph.vertices[ed.head] = d.graph.vertices.at(ed.head);
    }
    for (const auto& [cid, c] : d.crossings)
        if (edges.count(c.first) && edges.count(c.second)) r.crossings[cid] = c;
    for (const Id& e : edges) {
        std::vector<Id> s;
        for (const Id& cid : d.edge_seq(e))
            if (r.crossings.count(cid)) s.push_back(cid);
        r.seq[e] = std::move(s);
    }
    for (const auto& [v, darts] : d.rot) {
        if (!r.graph.vertices.count(v)) continue;
        std::vector<Dart> kept;
        for (const Dart& dart : darts)
            if (edges.count(dart.edge)) kept.push_back(dart);
        r.rot[v] = std::move(kept);
    }
    canonicalize_rotations(r);
    return r;
}

} // namespace fanplan

#include "fanplan/validate.hpp"

#include <algorithm>
#include <functional>

#include "fanplan/errors.hpp"
#include "fanplan/faces.hpp"

namespace fanplan {

ValidationReport validate_drawing(const Drawing& d) {
    ValidationReport rep;

    // graph invariants
    std::set<std::pair<Id, Id>> endpoint_sets;
    for (const auto& [eid, e] : d.graph.edges) {
        if (eid != e.id) rep.fail("edge " + eid + " stored under mismatched id");
        if (!d.graph.has_vertex(e.tail) || !d.graph.has_vertex(e.head)) {
            rep.fail("edge " + eid + " references unknown vertex");
            continue;
        }
        if (e.tail == e.head) rep.fail("self-loop at edge " + eid);
        auto key = std::minmax(e.tail, e.head);
        if (!endpoint_sets.insert({key.first, key.second}).second)
            rep.fail("parallel edge " + eid);
    }
    if (!rep.ok) return rep;

    // every edge needs a sequence entry, every sequence entry a known edge
    for (const auto& [eid, e] : d.graph.edges) {
        (void)e;
        if (!d.seq.count(eid)) rep.fail("edge " + eid + " has no crossing sequence");
    }
    for (const auto& [eid, s] : d.seq) {
        (void)s;
        if (!d.graph.has_edge(eid)) rep.fail("sequence for unknown edge " + eid);
    }
    if (!rep.ok) return rep;

    // crossing <-> sequence consistency
    std::map<Id, int> occurrences;
    for (const auto& [eid, s] : d.seq) {
        IdSet seen;
        for (const Id& cid : s) {
            occurrences[cid]++;
            if (!seen.insert(cid).second) rep.fail("crossing " + cid + " listed twice on edge " + eid);
            auto it = d.crossings.find(cid);
            if (it == d.crossings.end()) {
                rep.fail("edge " + eid + " lists unknown crossing " + cid);
                continue;
            }
            const Crossing& c = it->second;
            if (c.first != eid && c.second != eid)
                rep.fail("crossing " + cid + " on edge " + eid + " but names other edges");
        }
    }
    for (const auto& [cid, c] : d.crossings) {
        if (cid != c.id) rep.fail("crossing " + cid + " stored under mismatched id");
        if (!d.graph.has_edge(c.first) || !d.graph.has_edge(c.second)) {
            rep.fail("dangling crossing " + cid + ": unknown edge");
            continue;
        }
        if (c.first == c.second) rep.fail("self-crossing at " + cid);
        if (!id_less(c.first, c.second))
            rep.fail("crossing " + cid + " edges not in canonical order");
        if (c.sign != 1 && c.sign != -1) rep.fail("crossing " + cid + " has invalid sign");
        int n = occurrences.count(cid) ? occurrences[cid] : 0;
        if (n != 2) rep.fail("dangling crossing " + cid + ": appears in " + std::to_string(n) + " sequences");
        else {
            bool on_first = std::count(d.edge_seq(c.first).begin(), d.edge_seq(c.first).end(), cid) == 1;
            bool on_second = std::count(d.edge_seq(c.second).begin(), d.edge_seq(c.second).end(), cid) == 1;
            if (!on_first || !on_second)
                rep.fail("dangling crossing " + cid + ": not on both named edges");
        }
    }
    if (!rep.ok) return rep;

    // rotation completeness
    for (const auto& [v, label] : d.graph.vertices) {
        (void)label;
        if (!d.rot.count(v)) {
            rep.fail("vertex " + v + " has no rotation");
            continue;
        }
        IdSet incident;
        for (const auto& [eid, e] : d.graph.edges)
            if (e.tail == v || e.head == v) incident.insert(eid);
        IdSet listed;
        for (const Dart& dart : d.rot.at(v)) {
            if (!d.graph.has_edge(dart.edge)) {
                rep.fail("rotation at " + v + " lists unknown edge " + dart.edge);
                continue;
            }
            const Edge& e = d.graph.edges.at(dart.edge);
            Id at = dart.at_tail ? e.tail : e.head;
            if (at != v) rep.fail("rotation at " + v + " lists dart " + dart.token() + " of another vertex");
            if (!listed.insert(dart.edge).second)
                rep.fail("rotation at " + v + " lists edge " + dart.edge + " twice");
        }
        if (listed != incident) rep.fail("rotation at " + v + " does not match incident edges");
    }
    for (const auto& [v, darts] : d.rot) {
        (void)darts;
        if (!d.graph.has_vertex(v)) rep.fail("rotation for unknown vertex " + v);
    }
    if (!rep.ok) return rep;

    // genus: every component of the planarization must be spherical
    Planarization p = planarize(d);
    FaceSet fs = trace_faces_unchecked(p);
    for (const ComponentEuler& comp : component_euler(p, fs)) {
        if (comp.euler() != 2)
            rep.fail("component containing " + comp.nodes.front().token() +
                     " has Euler characteristic " + std::to_string(comp.euler()));
    }
    return rep;
}

Sign crossing_sign(const Drawing& d, const Id& c, const Id& base, const Id& toward) {
    const Crossing& x = d.crossing(c);
    if (x.first != base && x.second != base)
        throw lookup_error("edge " + base + " not in crossing " + c);
    const Id& e = d.other_edge(c, base);
    if (!d.is_endpoint(e, toward))
        throw lookup_error("vertex " + toward + " not an endpoint of edge " + e);
    Sign s = sign_relative_to(x, base);
    if (toward == d.edge(e).tail) s = -s; // orienting e toward its tail reverses it
    return s;
}

int crossing_count(const Drawing& d) { return d.crossing_count(); }

} // namespace fanplan

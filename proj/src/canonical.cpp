#include "fanplan/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "fanplan/errors.hpp"
#include "fanplan/geometry.hpp"

namespace fanplan {

namespace {

// two phases so new names may collide with old ones
void apply_renames(Drawing& d, const std::vector<std::pair<Id, Id>>& renames) {
    for (size_t i = 0; i < renames.size(); ++i)
        rename_crossing(d, renames[i].first, "rename.tmp." + std::to_string(i));
    for (size_t i = 0; i < renames.size(); ++i)
        rename_crossing(d, "rename.tmp." + std::to_string(i), renames[i].second);
}

Drawing k4() {
    PolySpec s;
    s.vertices = {{"v1", {0, 0}}, {"v2", {4, 0}}, {"v3", {2, 3}}, {"v4", {2, 1}}};
    s.edges = {{"e12", {"v1", "v2", {}}}, {"e13", {"v1", "v3", {}}}, {"e14", {"v1", "v4", {}}},
               {"e23", {"v2", "v3", {}}}, {"e24", {"v2", "v4", {}}}, {"e34", {"v3", "v4", {}}}};
    return from_polylines(s);
}

Drawing fig1a() {
    PolySpec s;
    s.vertices = {{"u", {0, 0}},  {"v", {8, 0}},  {"A", {4, 3}},
                  {"w1", {2, -2}}, {"w2", {4, -2}}, {"w3", {6, -2}}};
    s.edges = {{"a", {"u", "v", {}}},
               {"f1", {"A", "w1", {}}},
               {"f2", {"A", "w2", {}}},
               {"f3", {"A", "w3", {}}}};
    return from_polylines(s);
}

Drawing fig1b() {
    PolySpec s;
    s.vertices = {{"u", {0, 0}},  {"v", {6, 0}},  {"p1", {2, 1}},
                  {"q1", {2, -1}}, {"p2", {4, 1}}, {"q2", {4, -1}}};
    s.edges = {{"a", {"u", "v", {}}}, {"e1", {"p1", "q1", {}}}, {"e2", {"p2", "q2", {}}}};
    return from_polylines(s);
}

Drawing fig1c() {
    PolySpec s;
    s.vertices = {{"A", {0, 0}}, {"B", {4, 0}}, {"C", {3, -1}}};
    s.edges = {{"e1", {"A", "B", {}}}, {"e2", {"A", "C", {{1, 1}, {2.5, 1}}}}};
    return from_polylines(s);
}

Drawing fig1d() {
    PolySpec s;
    s.vertices = {{"u", {0, 0}}, {"v", {6, 0}}, {"A", {1, 2}}, {"w", {5, 2}}};
    s.edges = {{"a", {"u", "v", {}}}, {"e", {"A", "w", {{2, -1}, {4, -1}}}}};
    return from_polylines(s);
}

Drawing fig3a() {
    // K3 drawn as a pinwheel: every pair of edges crosses once, each edge's
    // crossing edges share the opposite vertex
    auto rot120 = [](Vec2 p) { return Vec2{-0.5 * p.x - 0.866 * p.y, 0.866 * p.x - 0.5 * p.y}; };
    auto rot240 = [&](Vec2 p) { return rot120(rot120(p)); };
    std::vector<Vec2> base = {{0.5, 0}, {0, -1.2}, {-1, -2.2}, {-2.6, -1.8}};
    PolySpec s;
    s.vertices = {{"P", {0, 2}}, {"Q", {-1.732, -1}}, {"R", {1.732, -1}}};
    PolyEdge pq{"P", "Q", base};
    PolyEdge qr{"Q", "R", {}};
    PolyEdge rp{"R", "P", {}};
    for (Vec2 p : base) qr.via.push_back(rot120(p));
    for (Vec2 p : base) rp.via.push_back(rot240(p));
    s.edges = {{"pq", pq}, {"qr", qr}, {"rp", rp}};
    return from_polylines(s);
}

Drawing fig3b() {
    PolySpec s;
    s.vertices = {{"u", {0, 0}}, {"v", {8, 0}}, {"A", {3, 2}}, {"w", {4.5, -0.8}}};
    s.edges = {{"a", {"u", "v", {}}},
               {"c", {"A", "w", {{2, -1.5}, {9, -1.5}, {9, 1.5}, {5, 1.5}}}}};
    return from_polylines(s);
}

Drawing fig4() {
    PolySpec s;
    s.vertices = {{"G", {0, 0}}, {"R", {9, 0}}, {"B", {4, 4}}, {"W", {8.5, -0.5}}, {"P", {5, -2}}};
    s.edges = {{"b", {"G", "R", {}}},
               {"g", {"B", "W", {{3, -1}, {-1, -1}, {-1, 6}, {8, 6}, {8, -1}}}},
               {"p", {"B", "P", {}}}};
    Drawing d = from_polylines(s);
    apply_renames(d, {{crossing_between(d, "g", "b", 1), "x"},
                      {crossing_between(d, "g", "b", 2), "y"},
                      {crossing_between(d, "p", "b", 1), "z"}});
    return d;
}

Drawing incident_fan_fig() {
    PolySpec s;
    s.vertices = {{"B", {0, 0}}, {"R", {8, 0}}, {"w1", {3, -1}}, {"w2", {5, -1}}};
    s.edges = {{"b", {"B", "R", {}}},
               {"g1", {"B", "w1", {{2, 1}}}},
               {"g2", {"B", "w2", {{2.5, 2}}}}};
    Drawing d = from_polylines(s);
    apply_renames(d, {{crossing_between(d, "b", "g1", 1), "x1"},
                      {crossing_between(d, "b", "g2", 1), "x2"}});
    return d;
}

// The sequence-of-edges construction: g and b cross at x; the chain
// r0, b1, r2 wraps around the bundle, and r2 crosses b between B and x2.
// Removing g leaves the known counterexample to the earlier density claim.
Drawing sequence_master(bool with_g) {
    PolySpec s;
    s.vertices = {{"R", {0, 0}},     {"B", {10, 0}},   {"G", {4.8, 2}},
                  {"W0", {3.9, -1.8}}, {"W1", {7, -2.3}}, {"W2", {0.3, -1}}};
    s.edges = {{"b", {"G", "R", {{5, -2}, {1, -2}}}},
               {"r0", {"B", "W0", {{9, -2.6}, {4.2, -2.6}}}},
               {"b1", {"R", "W1", {{0.4, -4}, {7, -4}}}},
               {"r2", {"B", "W2", {{9, 1}, {-1, 1}, {-1, -1}}}}};
    if (with_g) s.edges["g"] = {"R", "B", {}};
    Drawing d = from_polylines(s);
    std::vector<std::pair<Id, Id>> renames = {{crossing_between(d, "r0", "b", 1), "x0"},
                                              {crossing_between(d, "r0", "b1", 1), "x1"},
                                              {crossing_between(d, "b1", "r2", 1), "x2"},
                                              {crossing_between(d, "r2", "b", 1), "y"}};
    if (with_g) renames.push_back({crossing_between(d, "g", "b", 1), "x"});
    apply_renames(d, renames);
    return d;
}

} // namespace

const std::vector<std::string>& canonical_names() {
    static const std::vector<std::string> names = {
        "planar_k4", "fig_lemma1", "fig1a_fan",    "fig1b",        "fig1c",
        "fig1d",     "fig3a_k3",   "fig3b_spiral", "fig4_multi",   "fig_sequence",
        "ku_counterexample"};
    return names;
}

Drawing canonical(const std::string& name) {
    if (name == "planar_k4") return k4();
    if (name == "fig_lemma1") return incident_fan_fig();
    if (name == "fig1a_fan") return fig1a();
    if (name == "fig1b") return fig1b();
    if (name == "fig1c") return fig1c();
    if (name == "fig1d") return fig1d();
    if (name == "fig3a_k3") return fig3a();
    if (name == "fig3b_spiral") return fig3b();
    if (name == "fig4_multi") return fig4();
    if (name == "fig_sequence") return sequence_master(true);
    if (name == "ku_counterexample") return sequence_master(false);
    throw lookup_error("unknown canonical instance: " + name);
}

Id crossing_between(const Drawing& d, const Id& e1, const Id& e2, int i) {
    int seen = 0;
    for (const Id& cid : d.edge_seq(e1))
        if (d.other_edge(cid, e1) == e2 && ++seen == i) return cid;
    throw lookup_error("no " + std::to_string(i) + "-th crossing between " + e1 + " and " + e2);
}

void rename_crossing(Drawing& d, const Id& from, const Id& to) {
    if (from == to) return;
    if (d.crossings.count(to)) throw lookup_error("crossing id " + to + " already in use");
    Crossing c = d.crossing(from);
    c.id = to;
    d.crossings.erase(from);
    d.crossings[to] = c;
    for (auto& [eid, s] : d.seq) {
        (void)eid;
        for (Id& cid : s)
            if (cid == from) cid = to;
    }
}

} // namespace fanplan

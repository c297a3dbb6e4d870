#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/faces.hpp"
#include "fanplan/geometry.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::valid_canonical;

namespace {

// Independent face-count oracle: enumerate dart orbits with a hand-rolled
// walker that only uses the rotation lists, no shared code with FaceSet.
int brute_force_face_count(const Drawing& d) {
    Planarization p = planarize(d);
    std::set<std::tuple<Id, int, int>> seen;
    int faces = 0;
    for (const auto& [d0, src] : p.dart_source) {
        (void)src;
        if (seen.count({d0.edge, d0.arc, d0.dir})) continue;
        ++faces;
        PDart cur = d0;
        do {
            seen.insert({cur.edge, cur.arc, cur.dir});
            PDart rev = cur.reversed();
            const auto& rot = p.node_rot.at(p.source(rev));
            size_t i = 0;
            while (!(rot[i] == rev)) ++i;
            cur = rot[(i + 1) % rot.size()];
        } while (!(cur == d0));
    }
    return faces;
}

Drawing two_crossing_edges() {
    PolySpec s;
    s.vertices = {{"a1", {0, 0}}, {"a2", {4, 0}}, {"b1", {2, 2}}, {"b2", {2, -2}}};
    s.edges = {{"e", {"a1", "a2", {}}}, {"f", {"b1", "b2", {}}}};
    return from_polylines(s);
}

} // namespace

TEST_CASE("planar K4 validates with zero crossings") {
    Drawing d = valid_canonical("planar_k4");
    CHECK(crossing_count(d) == 0);
    CHECK(is_simple(d));
}

TEST_CASE("dangling crossing is reported") {
    Drawing d = two_crossing_edges();
    REQUIRE(validate_drawing(d).ok);
    // drop the crossing from one sequence only
    Id cid = d.edge_seq("e").front();
    d.seq["f"].clear();
    ValidationReport rep = validate_drawing(d);
    CHECK_FALSE(rep.ok);
    bool mentions = false;
    for (const std::string& v : rep.violations)
        if (v.find("dangling") != std::string::npos && v.find(cid) != std::string::npos)
            mentions = true;
    CHECK(mentions);
}

TEST_CASE("self-loops and parallel edges are rejected") {
    Drawing d;
    d.graph.vertices = {{"u", ""}, {"v", ""}};
    d.graph.edges["e"] = {"e", "u", "u"};
    d.seq["e"] = {};
    d.rot["u"] = {{"e", true}, {"e", false}};
    d.rot["v"] = {};
    CHECK_FALSE(validate_drawing(d).ok);

    Drawing p;
    p.graph.vertices = {{"u", ""}, {"v", ""}};
    p.graph.edges["e1"] = {"e1", "u", "v"};
    p.graph.edges["e2"] = {"e2", "v", "u"};
    p.seq["e1"] = p.seq["e2"] = {};
    p.rot["u"] = {{"e1", true}, {"e2", false}};
    p.rot["v"] = {{"e1", false}, {"e2", true}};
    CHECK_FALSE(validate_drawing(p).ok);
}

TEST_CASE("face tracing: single uncrossed edge has one face") {
    PolySpec s;
    s.vertices = {{"u", {0, 0}}, {"v", {1, 0}}};
    s.edges = {{"e", {"u", "v", {}}}};
    Drawing d = from_polylines(s);
    FaceSet fs = trace_faces(d);
    CHECK(fs.faces.size() == 1);
}

TEST_CASE("face tracing: two crossing edges satisfy the Euler identity") {
    Drawing d = two_crossing_edges();
    FaceSet fs = trace_faces(d);
    // 5 nodes, 4 arcs per the planarization of one crossing
    Planarization p = planarize(d);
    CHECK(p.nodes.size() == 5);
    CHECK(p.arc_count == 4);
    CHECK(static_cast<int>(p.nodes.size()) - p.arc_count + static_cast<int>(fs.faces.size()) == 2);
}

TEST_CASE("face counts agree with the brute-force dart-walk oracle") {
    for (const std::string& name : canonical_names()) {
        Drawing d = valid_canonical(name);
        FaceSet fs = trace_faces(d);
        CHECK(static_cast<int>(fs.faces.size()) == brute_force_face_count(d));
    }
}

TEST_CASE("Euler characteristic holds per component on every canonical instance") {
    for (const std::string& name : canonical_names()) {
        Drawing d = valid_canonical(name);
        Planarization p = planarize(d);
        FaceSet fs = trace_faces_unchecked(p);
        for (const ComponentEuler& c : component_euler(p, fs)) CHECK(c.euler() == 2);
    }
}

TEST_CASE("crossing_sign orientation algebra") {
    Drawing d = two_crossing_edges();
    Id cid = d.edge_seq("e").front();
    const Crossing& c = d.crossing(cid);
    // reading toward either endpoint of the other edge negates
    Sign toward_head = crossing_sign(d, cid, "e", d.edge("f").head);
    Sign toward_tail = crossing_sign(d, cid, "e", d.edge("f").tail);
    CHECK(toward_head == -toward_tail);
    CHECK(toward_head == c.sign * (c.first == "e" ? 1 : -1));
    // swapping the base edge negates as well
    Sign swapped = crossing_sign(d, cid, "f", d.edge("e").head);
    CHECK(swapped == -toward_head);
    CHECK_THROWS_AS(crossing_sign(d, cid, "e", "a1"), lookup_error);
}

TEST_CASE("crossing sign matrix against geometry") {
    // f heading south crosses e heading east: left to right, sign +1
    Drawing d = two_crossing_edges();
    Id cid = d.edge_seq("e").front();
    const Crossing& c = d.crossing(cid);
    // e = a1->a2 east, f = b1->b2 south
    CHECK(sign_relative_to(c, "e") == +1);
    CHECK(sign_relative_to(c, "f") == -1);
}

TEST_CASE("fig4_multi has crossings x, y, z") {
    Drawing d = valid_canonical("fig4_multi");
    CHECK(crossing_count(d) == 3);
    CHECK(d.crossings.count("x"));
    CHECK(d.crossings.count("y"));
    CHECK(d.crossings.count("z"));
    // g and b cross at x (first from B along g) then y
    CHECK(d.other_edge("x", "g") == "b");
    CHECK(d.other_edge("y", "g") == "b");
    CHECK(d.other_edge("z", "p") == "b");
    auto s = seq_from(d, "g", "B");
    std::vector<Id> with_b;
    for (const Id& cid : s)
        if (d.other_edge(cid, "g") == "b") with_b.push_back(cid);
    REQUIRE(with_b.size() == 2);
    CHECK(with_b[0] == "x");
    CHECK(with_b[1] == "y");
}

TEST_CASE("restrict_to keeps only the named edges") {
    Drawing d = valid_canonical("fig4_multi");
    Drawing r = restrict_to(d, {"b", "g"});
    CHECK(r.graph.edges.size() == 2);
    CHECK(r.crossing_count() == 2);
    CHECK(validate_drawing(r).ok);
}

#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/format.hpp"
#include "fanplan/errors.hpp"
#include "fanplan/fuzz.hpp"
#include "fanplan/layout.hpp"
#include "fanplan/recheck.hpp"
#include "fanplan/svg.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::valid_canonical;

TEST_CASE("layout places a triangle at three distinct points") {
    Rng rng(1);
    Drawing d = random_planar_seed(rng, 3);
    LayoutResult l = layout(d);
    REQUIRE(l.vertex_pos.size() == 3);
    auto it = l.vertex_pos.begin();
    Vec2 a = (it++)->second, b = (it++)->second, c = it->second;
    CHECK(dist(a, b) > 1e-3);
    CHECK(dist(a, c) > 1e-3);
    CHECK(std::abs(cross(b - a, c - a)) > 1e-6); // not collinear
}

TEST_CASE("layout reproduces the combinatorial structure of every canonical instance") {
    for (const std::string& name : canonical_names()) {
        Drawing d = valid_canonical(name);
        LayoutResult l = layout(d);
        RecheckReport rep = geometric_recheck(d, l);
        for (const std::string& m : rep.mismatches) MESSAGE(name, ": ", m);
        CHECK(rep.ok);
    }
}

TEST_CASE("fig4_multi polylines reproduce exactly the crossings x, y, z") {
    Drawing d = valid_canonical("fig4_multi");
    LayoutResult l = layout(d);
    CHECK(l.crossing_pos.size() == 3);
    CHECK(l.crossing_pos.count("x"));
    CHECK(l.crossing_pos.count("y"));
    CHECK(l.crossing_pos.count("z"));
    CHECK(geometric_recheck(d, l).ok);
}

TEST_CASE("layout handles disconnected drawings by tiling") {
    // two disjoint crossing pairs in one file
    std::string text = "fpd 1\nv a1\nv a2\nv b1\nv b2\nv c1\nv c2\n"
                       "e e1 a1 a2\ne e2 b1 b2\ne e3 c1 c2\n"
                       "x x1 e1 1 e2 1 +\n"
                       "rot a1: e1+\nrot a2: e1-\nrot b1: e2+\nrot b2: e2-\n"
                       "rot c1: e3+\nrot c2: e3-\n";
    Drawing d = parse(text);
    LayoutResult l = layout(d);
    CHECK(geometric_recheck(d, l).ok);
}

TEST_CASE("svg output is deterministic and well formed") {
    Drawing d = valid_canonical("fig_sequence");
    LayoutResult l = layout(d);
    std::string svg = render_svg(d, l);
    CHECK(svg == render_svg(d, l));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    // one path per edge, one circle per vertex
    size_t paths = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) paths++, pos++;
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) circles++, pos++;
    CHECK(paths == d.graph.edges.size());
    CHECK(circles == d.graph.vertices.size());
}

TEST_CASE("layout + recheck agree across a fuzz sample") {
    int success = 0;
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        FuzzParams p;
        p.seed = seed;
        p.n = 7;
        p.moves = 4;
        Drawing d = fuzz(p);
        try {
            LayoutResult l = layout(d);
            RecheckReport rep = geometric_recheck(d, l);
            for (const std::string& m : rep.mismatches) MESSAGE("seed ", seed, ": ", m);
            CHECK(rep.ok);
            success++;
        } catch (const layout_error&) {
        } catch (const degenerate_geometry&) {
        }
    }
    CHECK(success >= 25); // layouts may occasionally degenerate, not often
}

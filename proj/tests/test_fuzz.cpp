#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/format.hpp"
#include "fanplan/fuzz.hpp"
#include "fanplan/steps.hpp"
#include "fanplan/geometry.hpp"
#include "fanplan/simplify.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::require_fan;
using fanplan::testing::times_crossing;
using fanplan::testing::valid_canonical;

TEST_CASE("fuzz is deterministic for a fixed seed") {
    FuzzParams p;
    p.seed = 1;
    p.n = 8;
    p.moves = 5;
    Drawing a = fuzz(p);
    Drawing b = fuzz(p);
    CHECK(serialize(a) == serialize(b));
    p.seed = 2;
    CHECK(serialize(fuzz(p)) != serialize(a));
}

TEST_CASE("zero moves yield a planar drawing") {
    FuzzParams p;
    p.seed = 7;
    p.n = 9;
    p.moves = 0;
    Drawing d = fuzz(p);
    CHECK(crossing_count(d) == 0);
    CHECK(validate_drawing(d).ok);
    require_fan(d);
}

TEST_CASE("planar seeds validate across sizes") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        Rng rng(seed);
        Drawing d = random_planar_seed(rng, 3 + static_cast<int>(seed));
        CHECK(validate_drawing(d).ok);
        CHECK(crossing_count(d) == 0);
        require_fan(d);
    }
}

TEST_CASE("every fuzzed drawing is fan-planar and simplify recovers a simple one") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        FuzzParams p;
        p.seed = seed;
        p.n = 8;
        p.moves = 6;
        Drawing d = fuzz(p);
        CHECK(validate_drawing(d).ok);
        require_fan(d);
        SimplifyResult res = simplify(d);
        CHECK(is_simple(res.drawing));
        CHECK(crossing_count(res.drawing) <= crossing_count(d));
        CHECK(res.drawing.graph == d.graph);
    }
}

TEST_CASE("adjacent hook on planar K4 adds one fan-planar crossing") {
    Drawing d = valid_canonical("planar_k4");
    FanCertificate cert = require_fan(d);
    Rng rng(3);
    auto nd = desimplify(d, cert, MoveKind::adjacent_hook, rng);
    REQUIRE(nd);
    CHECK(crossing_count(*nd) == 1);
    CHECK(validate_drawing(*nd).ok);
    require_fan(*nd);
    // the new crossing joins adjacent edges
    const Crossing& c = nd->crossings.begin()->second;
    const Edge& a = nd->edge(c.first);
    const Edge& b = nd->edge(c.second);
    CHECK((a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head));
}

TEST_CASE("crossing spiral is absent on a crossing-free drawing") {
    Drawing d = valid_canonical("planar_k4");
    FanCertificate cert = require_fan(d);
    Rng rng(3);
    CHECK_FALSE(desimplify(d, cert, MoveKind::crossing_spiral, rng));
}

TEST_CASE("crossing spiral deepens a crossing into a consistent pair") {
    Drawing d = valid_canonical("fig1c");
    FanCertificate cert = require_fan(d);
    Rng rng(5);
    auto nd = desimplify(d, cert, MoveKind::crossing_spiral, rng);
    REQUIRE(nd);
    CHECK(crossing_count(*nd) == 2);
    CHECK(validate_drawing(*nd).ok);
    require_fan(*nd);
    // both crossings join the same pair, with equal signs, adjacent on both
    std::vector<Crossing> cs;
    for (const auto& [cid, c] : nd->crossings) {
        (void)cid;
        cs.push_back(c);
    }
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].first == cs[1].first);
    CHECK(cs[0].second == cs[1].second);
    CHECK(cs[0].sign == cs[1].sign);
    // and the multi-crossing step undoes it
    auto undo = multi_crossing_step(*nd, *check_fan_planar(*nd).cert);
    REQUIRE(undo);
    CHECK(undo->record.after == 1);
}

TEST_CASE("fuzz honors the vertex budget and stays within it") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        FuzzParams p;
        p.seed = seed;
        p.n = 12;
        p.moves = 3;
        Drawing d = fuzz(p);
        CHECK(d.graph.vertices.size() >= 3);
        CHECK(d.graph.vertices.size() <= 12);
    }
}

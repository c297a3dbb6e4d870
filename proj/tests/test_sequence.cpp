#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/errors.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/fuzz.hpp"
#include "fanplan/sequence.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::require_fan;
using fanplan::testing::times_crossing;
using fanplan::testing::valid_canonical;

namespace {

SequenceWitness master_witness(const Drawing& d) {
    FanCertificate cert = require_fan(d);
    ConflictResult res = build_conflict_sequence(d, cert, "b", "g", "x");
    REQUIRE(res.witness);
    return *res.witness;
}

} // namespace

TEST_CASE("fig_sequence yields the complete k=2 witness") {
    Drawing d = valid_canonical("fig_sequence");
    SequenceWitness w = master_witness(d);
    CHECK(w.k() == 2);
    CHECK(w.chain == std::vector<Id>{"r0", "b1", "r2"});
    CHECK(w.xs == std::vector<Id>{"x0", "x1", "x2"});
    CHECK(w.B == "B");
    CHECK(w.R == "R");
    CHECK(w.G == "G");
    CHECK(w.regions.size() == 2);

    WitnessReport rep = check_sequence_witness(d, w);
    for (const std::string& m : rep.messages) MESSAGE(m);
    CHECK(rep.ok);
    for (const char* inv : {"I1", "I2", "I3", "I4", "I5", "I6", "R1"})
        CHECK(rep.invariant.at(inv));
}

TEST_CASE("witness mutations trip the matching invariant") {
    Drawing d = valid_canonical("fig_sequence");
    SequenceWitness w = master_witness(d);

    SUBCASE("color flip: swapping chain entries breaks I1") {
        SequenceWitness m = w;
        std::swap(m.chain[0], m.chain[1]);
        WitnessReport rep = check_sequence_witness(d, m);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.invariant.at("I1"));
    }
    SUBCASE("reordered xs break I3") {
        SequenceWitness m = w;
        std::swap(m.xs[1], m.xs[2]);
        WitnessReport rep = check_sequence_witness(d, m);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.invariant.at("I3"));
    }
    SUBCASE("wrong special vertices break I1/I2") {
        SequenceWitness m = w;
        std::swap(m.B, m.R);
        WitnessReport rep = check_sequence_witness(d, m);
        CHECK_FALSE(rep.ok);
        CHECK((!rep.invariant.at("I1") || !rep.invariant.at("I2")));
    }
    SUBCASE("dangling references throw") {
        SequenceWitness m = w;
        m.chain[2] = "r99";
        CHECK_THROWS_AS(check_sequence_witness(d, m), lookup_error);
    }
}

TEST_CASE("chain_redraw_step eliminates x and keeps only the far crossings of b") {
    Drawing d = valid_canonical("fig_sequence");
    FanCertificate cert = require_fan(d);
    SequenceWitness w = master_witness(d);
    StepResult step = chain_redraw_step(d, cert, w);
    CHECK(step.record.rule == Rule::chain_redraw);
    CHECK(step.record.before == 5);
    CHECK(step.record.after == 3);
    // removed: x plus everything on b between R and x (that is x0)
    CHECK(step.record.route.removed == IdSet{"x", "x0"});
    // the new b keeps exactly its old crossings strictly between x and G
    CHECK(step.drawing.edge_seq("b") == std::vector<Id>{"y"});
    CHECK(times_crossing(step.drawing, "b", "g") == 0);
    require_fan(step.drawing);
    CHECK(is_simple(step.drawing));
}

TEST_CASE("chain_redraw_step refuses a failing witness") {
    Drawing d = valid_canonical("fig_sequence");
    FanCertificate cert = require_fan(d);
    SequenceWitness w = master_witness(d);
    std::swap(w.xs[1], w.xs[2]);
    CHECK_THROWS_AS(chain_redraw_step(d, cert, w), invalid_drawing_error);
}

TEST_CASE("base exit when the first crossing on b from R is x itself") {
    Drawing d = valid_canonical("fig1c");
    NormalizeResult norm = normalize(d);
    // roles: b = e1, g = e2, shared vertex A
    ConflictResult res = build_conflict_sequence(norm.drawing, norm.cert, "e1", "e2",
                                                 d.edge_seq("e1").front());
    REQUIRE(res.redraw);
    CHECK(res.exit == "base: x0 = x");
    Drawing after = reroute_edge(norm.drawing, *res.redraw);
    CHECK(crossing_count(after) == 0);
    require_fan(after);
}

TEST_CASE("build_conflict_sequence enforces the untangled-state preconditions") {
    Drawing d = valid_canonical("fig4_multi"); // has a pair crossing twice
    FanCertificate cert = require_fan(d);
    CHECK_THROWS_AS(build_conflict_sequence(d, cert, "b", "g", "x"), invalid_drawing_error);
}

TEST_CASE("spiral chains of any even length build checking witnesses") {
    for (int k : {2, 4, 6}) {
        Drawing d = spiral_chain_instance(k);
        CHECK(crossing_count(d) == k + 3);
        FanCertificate cert = require_fan(d);
        ConflictResult res = build_conflict_sequence(d, cert, "b", "g", "x");
        REQUIRE(res.witness);
        CHECK(res.witness->k() == k);
        WitnessReport rep = check_sequence_witness(d, *res.witness);
        for (const std::string& m : rep.messages) MESSAGE(m);
        CHECK(rep.ok);
        StepResult step = chain_redraw_step(d, cert, *res.witness);
        CHECK(step.record.after == step.record.before - 2);
    }
    CHECK_THROWS_AS(spiral_chain_instance(3), lookup_error);
}

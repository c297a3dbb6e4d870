#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/faces.hpp"
#include "fanplan/format.hpp"
#include "fanplan/fuzz.hpp"
#include "fanplan/simplify.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::valid_canonical;

namespace {

std::vector<Drawing> property_corpus() {
    std::vector<Drawing> out;
    for (const std::string& name : canonical_names()) out.push_back(canonical(name));
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        FuzzParams p;
        p.seed = seed;
        p.n = 5 + seed % 8;
        p.moves = 1 + seed % 9;
        out.push_back(fuzz(p));
    }
    return out;
}

} // namespace

TEST_CASE("sign algebra: flipping either orientation negates, flipping both is the identity") {
    for (const Drawing& d : property_corpus()) {
        for (const auto& [cid, c] : d.crossings) {
            for (const Id& base : {c.first, c.second}) {
                const Id& other = base == c.first ? c.second : c.first;
                Sign to_head = crossing_sign(d, cid, base, d.edge(other).head);
                Sign to_tail = crossing_sign(d, cid, base, d.edge(other).tail);
                CHECK(to_head == -to_tail);
                // exchanging the roles of the two edges also negates
                Sign swapped = crossing_sign(d, cid, other, d.edge(base).head);
                CHECK(swapped == -to_head);
                // both reversals cancel
                Sign both = -crossing_sign(d, cid, other, d.edge(base).tail);
                CHECK(-both == to_head);
            }
        }
    }
}

TEST_CASE("round trip: the planarization satisfies the Euler identity per component") {
    for (const Drawing& d : property_corpus()) {
        REQUIRE(validate_drawing(d).ok);
        Planarization p = planarize(d);
        FaceSet fs = trace_faces_unchecked(p);
        for (const ComponentEuler& c : component_euler(p, fs)) CHECK(c.euler() == 2);
    }
}

TEST_CASE("locality: every rewrite step leaves all other edges untouched") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        FuzzParams p;
        p.seed = seed;
        p.n = 6 + seed % 7;
        p.moves = 3 + seed % 8;
        Drawing d = fuzz(p);
        Drawing prev = d;
        SimplifyHooks hooks;
        hooks.on_step = [&](const Drawing& after, const StepRecord& rec) {
            IdSet others;
            for (const auto& [eid, e] : prev.graph.edges) {
                (void)e;
                if (eid != rec.target) others.insert(eid);
            }
            CHECK(restrict_to(prev, others) == restrict_to(after, others));
            prev = after;
        };
        simplify(d, hooks);
    }
}

TEST_CASE("trace length never exceeds the initial crossing count") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        FuzzParams p;
        p.seed = seed;
        p.n = 5 + seed % 8;
        p.moves = 2 + seed % 10;
        Drawing d = fuzz(p);
        SimplifyResult res = simplify(d);
        CHECK(static_cast<int>(res.trace.steps.size()) <= d.crossing_count());
    }
}

TEST_CASE("check_fan_planar is a pure function of the drawing") {
    for (const Drawing& d : property_corpus()) {
        FanOutcome a = check_fan_planar(d);
        FanOutcome b = check_fan_planar(d);
        REQUIRE(a.ok() == b.ok());
        if (a.ok()) CHECK(a.cert->special == b.cert->special);
    }
}

TEST_CASE("pairwise orientation: multi-crossing pairs carry one consistent sign") {
    // with any fixed orientations, all crossings of a pair agree in sign
    // whenever the drawing is fan-planar
    for (const Drawing& d : property_corpus()) {
        if (!check_fan_planar(d).ok()) continue;
        std::map<std::pair<Id, Id>, std::set<Sign>> signs;
        for (const auto& [cid, c] : d.crossings) {
            (void)cid;
            signs[{c.first, c.second}].insert(c.sign);
        }
        for (const auto& [pair, set] : signs) {
            (void)pair;
            CHECK(set.size() == 1);
        }
    }
}

TEST_CASE("serialization is injective on the corpus") {
    std::map<std::string, Drawing> seen;
    for (const Drawing& d : property_corpus()) {
        std::string text = serialize(d);
        auto it = seen.find(text);
        if (it != seen.end()) CHECK(it->second == d);
        seen[text] = d;
    }
    CHECK(seen.size() >= 25);
}

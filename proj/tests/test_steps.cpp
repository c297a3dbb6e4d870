#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/errors.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/steps.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::require_fan;
using fanplan::testing::times_crossing;
using fanplan::testing::valid_canonical;

TEST_CASE("incident_special_step removes the crossing nearest the incident special vertex") {
    Drawing d = valid_canonical("fig_lemma1");
    FanCertificate cert = require_fan(d);
    auto step = incident_special_step(d, cert);
    REQUIRE(step);
    CHECK(step->record.rule == Rule::incident_special);
    CHECK(step->record.before == 2);
    CHECK(step->record.after == 1);
    CHECK(step->record.target == "g1"); // x1 is nearest B
    CHECK(step->drawing.edge_seq("g1").empty());
    CHECK(validate_drawing(step->drawing).ok);

    // iterating with the maintained certificate clears the whole fan
    auto step2 = incident_special_step(step->drawing, step->cert);
    REQUIRE(step2);
    CHECK(step2->record.after == 0);
    CHECK(step2->record.target == "g2");
    CHECK_FALSE(incident_special_step(step2->drawing, step2->cert));
}

TEST_CASE("incident_special_step is absent when no edge is incident to its special vertex") {
    Drawing d = valid_canonical("fig4_multi");
    FanCertificate cert = require_fan(d);
    CHECK_FALSE(incident_special_step(d, cert));
    Drawing k4 = valid_canonical("planar_k4");
    CHECK_FALSE(incident_special_step(k4, require_fan(k4)));
}

TEST_CASE("multi_crossing_step on fig4_multi eliminates x and keeps y") {
    Drawing d = valid_canonical("fig4_multi");
    FanCertificate cert = require_fan(d);
    auto step = multi_crossing_step(d, cert);
    REQUIRE(step);
    CHECK(step->record.rule == Rule::multi_crossing);
    CHECK(step->record.before == 3);
    CHECK(step->record.after == 2);
    CHECK(step->record.target == "g");
    CHECK(step->record.route.removed == IdSet{"x"});
    CHECK(times_crossing(step->drawing, "g", "b") == 1);
    CHECK(step->drawing.edge_seq("g") == std::vector<Id>{"y"});
    CHECK(is_simple(step->drawing));
    require_fan(step->drawing);
}

TEST_CASE("multi_crossing_step on fig3b_spiral unwinds the S2 pair while staying fan-planar") {
    Drawing d = valid_canonical("fig3b_spiral");
    FanCertificate cert = require_fan(d);
    auto step = multi_crossing_step(d, cert);
    REQUIRE(step);
    CHECK(step->record.before == 2);
    CHECK(step->record.after < 2);
    require_fan(step->drawing);
    CHECK(is_simple(step->drawing));
}

TEST_CASE("multi_crossing_step is absent when every pair crosses at most once") {
    for (std::string name : {"fig3a_k3", "fig_sequence", "planar_k4", "fig1a_fan"}) {
        Drawing d = valid_canonical(name);
        FanCertificate cert = require_fan(d);
        CHECK_FALSE(multi_crossing_step(d, cert));
    }
}

TEST_CASE("multi-crossing injection: inherited crossings never outnumber removed ones per edge") {
    Drawing d = valid_canonical("fig4_multi");
    FanCertificate cert = require_fan(d);
    auto step = multi_crossing_step(d, cert);
    REQUIRE(step);
    IdSet old_ids(d.edge_seq("g").begin(), d.edge_seq("g").end());
    IdMap<int> inherited, removed;
    for (const Id& cid : step->drawing.edge_seq("g"))
        if (!old_ids.count(cid)) inherited[step->drawing.other_edge(cid, "g")]++;
    for (const Id& cid : step->record.route.removed) removed[d.other_edge(cid, "g")]++;
    for (auto& [edge, n] : inherited) CHECK(n <= removed[edge]);
}

TEST_CASE("normalize: identity on already-normalized drawings") {
    for (std::string name : {"fig3a_k3", "planar_k4", "fig_sequence", "ku_counterexample"}) {
        Drawing d = valid_canonical(name);
        NormalizeResult res = normalize(d);
        CHECK(res.trace.steps.empty());
        CHECK(res.drawing == d);
    }
}

TEST_CASE("normalize reaches the untangled state") {
    for (std::string name : {"fig_lemma1", "fig4_multi", "fig3b_spiral", "fig1c"}) {
        Drawing d = valid_canonical(name);
        int before = crossing_count(d);
        NormalizeResult res = normalize(d);
        CHECK(crossing_count(res.drawing) <= before);
        CHECK(static_cast<int>(res.trace.steps.size()) <= before);
        // strictly decreasing counts along the trace
        int prev = before;
        for (const StepRecord& s : res.trace.steps) {
            CHECK(s.before == prev);
            CHECK(s.after < s.before);
            prev = s.after;
        }
        // no pair crosses twice; no crossed edge incident to its special
        ConfigReport rep = detect_configurations(res.drawing);
        CHECK(rep.s2.empty());
        for (const auto& [eid, sp] : res.cert.special)
            if (!res.drawing.edge_seq(eid).empty())
                CHECK_FALSE(res.drawing.is_endpoint(eid, sp));
        require_fan(res.drawing);
    }
}

TEST_CASE("normalize rejects non-fan-planar input") {
    Drawing d = valid_canonical("fig1d");
    CHECK_THROWS_AS(normalize(d), invalid_drawing_error);
}

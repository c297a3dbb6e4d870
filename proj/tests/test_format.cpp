#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/errors.hpp"
#include "fanplan/format.hpp"
#include "fanplan/validate.hpp"
#include "helpers.hpp"

using namespace fanplan;
using fanplan::testing::valid_canonical;

TEST_CASE("round trip on every canonical instance") {
    for (const std::string& name : canonical_names()) {
        Drawing d = valid_canonical(name);
        std::string text = serialize(d);
        Drawing back = parse(text);
        CHECK(back == d);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("serialization is canonical and byte-stable") {
    Drawing d = valid_canonical("planar_k4");
    std::string a = serialize(d);
    std::string b = serialize(canonical("planar_k4"));
    CHECK(a == b);
    // a different sign on one crossing changes the text
    Drawing e = valid_canonical("fig1c");
    std::string before = serialize(e);
    Id cid = e.crossings.begin()->first;
    e.crossings[cid].sign = -e.crossings[cid].sign;
    if (validate_drawing(e).ok) CHECK(serialize(e) != before);
}

TEST_CASE("parse reports syntax errors with line numbers") {
    CHECK_THROWS_AS(parse("nope"), parse_error);
    try {
        parse("fpd 1\nv a\nv b\ne e1 a b\nx huh\n");
    } catch (const parse_error& e) {
        CHECK(e.line == 5);
    }
    CHECK_THROWS_AS(parse("fpd 2\n"), parse_error);
    CHECK_THROWS_AS(parse(""), parse_error);
}

TEST_CASE("parse reports semantic errors naming the invariant") {
    // crossing on a nonexistent edge
    CHECK_THROWS_AS(parse("fpd 1\nv a\nv b\ne e1 a b\nx x1 e1 1 e9 1 +\n"), invalid_drawing_error);
    // dangling position
    std::string bad = "fpd 1\nv a\nv b\nv c\nv d\n"
                      "e e1 a b\ne e2 c d\n"
                      "x x1 e1 2 e2 1 +\n"
                      "rot a: e1+\nrot b: e1-\nrot c: e2+\nrot d: e2-\n";
    CHECK_THROWS_AS(parse(bad), invalid_drawing_error);
    // missing rotation for a connected vertex
    CHECK_THROWS_AS(parse("fpd 1\nv a\nv b\ne e1 a b\n"), invalid_drawing_error);
}

TEST_CASE("comments and labels survive") {
    std::string text = "fpd 1\n# a comment\nv a hub vertex\nv b\ne e1 a b # trailing\n"
                       "rot a: e1+\nrot b: e1-\n";
    Drawing d = parse(text);
    CHECK(d.graph.vertices.at("a") == "hub vertex");
    Drawing back = parse(serialize(d));
    CHECK(back.graph.vertices.at("a") == "hub vertex");
}

TEST_CASE("parse accepts reversed crossing edge order") {
    // the same drawing written with the x line in either edge order
    std::string t1 = "fpd 1\nv a1\nv a2\nv b1\nv b2\n"
                     "e e a1 a2\ne f b1 b2\n"
                     "x c1 e 1 f 1 +\n"
                     "rot a1: e+\nrot a2: e-\nrot b1: f+\nrot b2: f-\n";
    std::string t2 = "fpd 1\nv a1\nv a2\nv b1\nv b2\n"
                     "e e a1 a2\ne f b1 b2\n"
                     "x c1 f 1 e 1 -\n"
                     "rot a1: e+\nrot a2: e-\nrot b1: f+\nrot b2: f-\n";
    CHECK(parse(t1) == parse(t2));
}

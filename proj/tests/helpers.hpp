#pragma once

#include <doctest.h>

#include "fanplan/canonical.hpp"
#include "fanplan/configs.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/validate.hpp"

namespace fanplan::testing {

inline Drawing valid_canonical(const std::string& name) {
    Drawing d = canonical(name);
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok) {
        for (const std::string& v : rep.violations) MESSAGE(name, ": ", v);
    }
    REQUIRE(rep.ok);
    return d;
}

inline FanCertificate require_fan(const Drawing& d) {
    FanOutcome outcome = check_fan_planar(d);
    if (!outcome.ok())
        MESSAGE("violation at ", outcome.violation->edge, " reason ",
                static_cast<int>(outcome.violation->reason));
    REQUIRE(outcome.ok());
    return *outcome.cert;
}

// brute-force crossing count between two edges
inline int times_crossing(const Drawing& d, const Id& e, const Id& f) {
    int n = 0;
    for (const Id& cid : d.edge_seq(e))
        if (d.other_edge(cid, e) == f) ++n;
    return n;
}

} // namespace fanplan::testing

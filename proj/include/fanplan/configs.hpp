#pragma once

#include <vector>

#include "fanplan/drawing.hpp"

namespace fanplan {

// Witnesses for the four forbidden configurations. Every witness re-verifies
// against the drawing it was computed from.

struct S1Witness { // adjacent edges cross
    Id e, f;
    Id crossing;
};

struct S2Witness { // a pair crosses at least twice
    Id e, f;
    std::vector<Id> crossings;
};

struct SF1Witness { // two independent edges cross a common third edge
    Id base, c1, c2;
};

struct SF2Witness { // adjacent edges cross `base` with their shared endpoint
                    // on different sides of it
    Id base, c1, c2;
    Id shared;
    Id crossing1, crossing2; // crossings on base with opposite signs toward shared
};

struct ConfigReport {
    std::vector<S1Witness> s1;
    std::vector<S2Witness> s2;
    std::vector<SF1Witness> sf1;
    std::vector<SF2Witness> sf2;
};

// Exhaustive witness lists. The drawing is simple iff s1 and s2 are empty; a
// simple drawing is fan-planar iff additionally sf1 and sf2 are empty.
ConfigReport detect_configurations(const Drawing& d);

bool is_simple(const Drawing& d);

} // namespace fanplan

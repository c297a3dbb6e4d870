#pragma once

#include <string>
#include <vector>

#include "fanplan/drawing.hpp"

namespace fanplan {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

// Checks every Drawing invariant: graph simplicity, crossing/sequence
// consistency, rotation completeness, and Euler characteristic 2 on every
// connected component of the planarization (spherical embedding).
// Violations are data, not failures.
ValidationReport validate_drawing(const Drawing& d);

// The stored sign re-expressed with `base` in reference orientation and the
// other edge of c oriented toward `toward`.
Sign crossing_sign(const Drawing& d, const Id& c, const Id& base, const Id& toward);

int crossing_count(const Drawing& d);

} // namespace fanplan

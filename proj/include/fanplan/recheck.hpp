#pragma once

#include <string>
#include <vector>

#include "fanplan/drawing.hpp"
#include "fanplan/layout.hpp"

namespace fanplan {

struct RecheckReport {
    bool ok = true;
    std::vector<std::string> mismatches;

    void fail(std::string msg) {
        ok = false;
        mismatches.push_back(std::move(msg));
    }
};

// Recomputes the crossing structure from coordinates alone and compares it
// with the combinatorial drawing: crossing sets, per-edge orders, signs, and
// the fan-planarity verdict. Throws degenerate_geometry when the coordinates
// cannot be read back (counts as a failed layout, not a mismatch).
RecheckReport geometric_recheck(const Drawing& d, const LayoutResult& l);

} // namespace fanplan

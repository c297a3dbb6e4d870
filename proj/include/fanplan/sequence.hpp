#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanplan/drawing.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/steps.hpp"
#include "fanplan/reroute.hpp"

namespace fanplan {

// The structure behind the final rerouting step: adjacent edges b = (G,R)
// and g = (R,B) crossing at x, plus the alternating chain r_0, b_1, ..., r_k
// with its crossings x_0..x_k and the regions f_i realized in the induced
// subdrawings.
struct SequenceWitness {
    Id b, g, x;
    Id B, R, G;
    std::vector<Id> chain; // r_0, b_1, r_2, ..., r_k (even positions red)
    std::vector<Id> xs;    // x_0..x_k; x_i joins chain[i-1] (b for i=0) and chain[i]
    std::vector<std::vector<std::string>> regions; // face keys of f_i per Gamma_i, 0 <= i < k

    int k() const { return static_cast<int>(chain.size()) - 1; }
};

// Result of the conflict analysis: either a route for g realizing one of
// the early exits, or a complete sequence witness.
struct ConflictResult {
    std::optional<RouteSpec> redraw;
    std::optional<SequenceWitness> witness;
    std::string exit; // which branch produced the result
};

ConflictResult build_conflict_sequence(const Drawing& d, const FanCertificate& cert,
                                       const Id& b, const Id& g, const Id& x);

struct WitnessReport {
    bool ok = true;
    std::map<std::string, bool> invariant; // I1..I6 and R1 (the remark)
    std::vector<std::string> messages;

    void fail(const std::string& inv, const std::string& msg) {
        ok = false;
        invariant[inv] = false;
        messages.push_back(inv + ": " + msg);
    }
};

// Verifies invariants I1-I6 and the remark that g crosses only b (and
// possibly r_0) within each Gamma_i. Throws lookup_error on dangling ids.
WitnessReport check_sequence_witness(const Drawing& d, const SequenceWitness& w);

// Reroutes b along g up to x; the corridor span must be crossing-free (the
// paper's no-new-crossings proposition), asserted with internal_contradiction.
StepResult chain_redraw_step(const Drawing& d, const FanCertificate& cert, const SequenceWitness& w);

} // namespace fanplan

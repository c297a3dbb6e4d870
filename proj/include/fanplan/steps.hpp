#pragma once

#include <functional>
#include <optional>

#include "fanplan/drawing.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/reroute.hpp"

namespace fanplan {

enum class Rule { incident_special, multi_crossing, conflict_redraw, chain_redraw };

inline const char* to_string(Rule r) {
    switch (r) {
        case Rule::incident_special: return "incident-special";
        case Rule::multi_crossing: return "multi-crossing";
        case Rule::conflict_redraw: return "conflict-redraw";
        case Rule::chain_redraw: return "chain-redraw";
    }
    return "?";
}

struct StepRecord {
    Rule rule;
    Id target;
    RouteSpec route;
    int before = 0;
    int after = 0;
};

struct Trace {
    std::vector<StepRecord> steps;
};

struct StepResult {
    Drawing drawing;
    FanCertificate cert; // repaired for the new drawing
    StepRecord record;
};

using StepObserver = std::function<void(const Drawing&, const StepRecord&)>;

// If some crossed edge is incident to its special vertex, reroutes the
// crossing edge nearest that vertex along it; the crossing count drops and
// fan-planarity is preserved. Candidates are scanned in ascending id order.
std::optional<StepResult> incident_special_step(const Drawing& d, const FanCertificate& cert);

// If some pair of edges crosses at least twice, picks the pivot pair by a
// fixed traversal rule and reroutes one of the two; at least their first
// crossing vanishes, and inherited crossings map injectively into the
// replaced ones.
std::optional<StepResult> multi_crossing_step(const Drawing& d, const FanCertificate& cert);

struct NormalizeResult {
    Drawing drawing;
    FanCertificate cert;
    Trace trace;
};

// Exhausts incident_special_step and multi_crossing_step, then re-chooses
// free special vertices. The result has no pair crossing twice and no edge
// incident to its special vertex, with at most as many crossings as the
// input.
NormalizeResult normalize(const Drawing& d, const StepObserver& observer = nullptr);

} // namespace fanplan

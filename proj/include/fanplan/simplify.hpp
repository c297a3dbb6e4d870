#pragma once

#include "fanplan/drawing.hpp"
#include "fanplan/errors.hpp"
#include "fanplan/fan.hpp"
#include "fanplan/steps.hpp"
#include "fanplan/sequence.hpp"

namespace fanplan {

// Raised when simplify is handed a drawing that is not fan-planar.
struct not_fan_planar_error : error {
    FanViolation violation;
    explicit not_fan_planar_error(FanViolation v)
        : error("drawing is not fan-planar at edge " + v.edge), violation(std::move(v)) {}
};

struct SimplifyResult {
    Drawing drawing;
    Trace trace;
};

struct SimplifyHooks {
    StepObserver on_step;                                             // every rewrite step
    std::function<void(const Drawing&, const SequenceWitness&)> on_witness; // every chain witness
};

// The simplification driver: normalize, then resolve one adjacent crossing
// (a conflict redraw or a chain-based reroute) and repeat until the drawing
// is simple. The result is a simple fan-planar drawing of the same graph
// with at most as many crossings, and the trace shows strictly decreasing
// counts.
SimplifyResult simplify(const Drawing& d, const SimplifyHooks& hooks = {});

} // namespace fanplan

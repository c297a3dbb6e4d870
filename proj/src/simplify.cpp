#include "fanplan/simplify.hpp"

#include "fanplan/configs.hpp"
#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

// lowest-id crossing between adjacent edges, if any
std::optional<Id> find_adjacent_crossing(const Drawing& d) {
    for (const auto& [cid, c] : d.crossings) {
        const Edge& a = d.edge(c.first);
        const Edge& b = d.edge(c.second);
        if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head)
            return cid;
    }
    return std::nullopt;
}

} // namespace

SimplifyResult simplify(const Drawing& d, const SimplifyHooks& hooks) {
    FanOutcome outcome = check_fan_planar(d);
    if (!outcome.ok()) throw not_fan_planar_error(*outcome.violation);

    SimplifyResult res{d, {}};
    int initial = d.crossing_count();

    while (true) {
        NormalizeResult norm = normalize(res.drawing, hooks.on_step);
        res.drawing = std::move(norm.drawing);
        for (StepRecord& s : norm.trace.steps) res.trace.steps.push_back(std::move(s));
        FanCertificate cert = std::move(norm.cert);

        std::optional<Id> x = find_adjacent_crossing(res.drawing);
        if (!x) break;

        // roles: b gets the lower identifier, g the other; the normalized
        // state forces special(b) and special(g) to the far endpoints
        const Crossing& c = res.drawing.crossing(*x);
        Id b = c.first, g = c.second;
        ConflictResult conflict = build_conflict_sequence(res.drawing, cert, b, g, *x);
        if (conflict.redraw) {
            int before = res.drawing.crossing_count();
            Drawing nd = reroute_edge(res.drawing, *conflict.redraw);
            if (nd.crossing_count() >= before)
                throw internal_contradiction("conflict redraw did not decrease the crossing count");
            repair_certificate(nd, cert); // fan-planarity must survive
            StepRecord rec{Rule::conflict_redraw, conflict.redraw->target, *conflict.redraw, before,
                           nd.crossing_count()};
            res.drawing = std::move(nd);
            res.trace.steps.push_back(rec);
            if (hooks.on_step) hooks.on_step(res.drawing, rec);
        } else {
            if (hooks.on_witness) hooks.on_witness(res.drawing, *conflict.witness);
            StepResult step = chain_redraw_step(res.drawing, cert, *conflict.witness);
            res.drawing = std::move(step.drawing);
            res.trace.steps.push_back(step.record);
            if (hooks.on_step) hooks.on_step(res.drawing, step.record);
        }
    }

    if (!is_simple(res.drawing))
        throw internal_contradiction("simplify finished on a non-simple drawing");
    if (!check_fan_planar(res.drawing).ok())
        throw internal_contradiction("simplify broke fan-planarity");
    if (!(res.drawing.graph == d.graph))
        throw internal_contradiction("simplify changed the graph");
    if (res.drawing.crossing_count() > initial)
        throw internal_contradiction("simplify increased the crossing count");
    return res;
}

} // namespace fanplan

#include "fanplan/steps.hpp"

#include <algorithm>

#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

StepResult apply_route(const Drawing& d, const FanCertificate& cert, Rule rule, RouteSpec route) {
    route.removed = route_removed(d, route);
    Drawing nd = reroute_edge(d, route);
    if (nd.crossing_count() >= d.crossing_count())
        throw internal_contradiction(std::string(to_string(rule)) +
                                     " did not decrease the crossing count");
    StepResult res{std::move(nd), {}, {rule, route.target, route, d.crossing_count(), 0}};
    res.record.after = res.drawing.crossing_count();
    res.cert = repair_certificate(res.drawing, cert);
    return res;
}

// Injection check for the multi-crossing step: inherited crossings per
// partner edge may not outnumber the removed ones with that partner.
void check_injection(const Drawing& before, const Drawing& after, const StepRecord& rec) {
    IdSet old_ids(before.edge_seq(rec.target).begin(), before.edge_seq(rec.target).end());
    IdMap<int> inherited, removed;
    for (const Id& cid : after.edge_seq(rec.target))
        if (!old_ids.count(cid)) inherited[after.other_edge(cid, rec.target)]++;
    for (const Id& cid : rec.route.removed) removed[before.other_edge(cid, rec.target)]++;
    for (const auto& [partner, n] : inherited)
        if (n > removed[partner])
            throw internal_contradiction("multi-crossing step inherited more crossings with " + partner +
                                         " than it removed");
}

} // namespace

std::optional<StepResult> incident_special_step(const Drawing& d, const FanCertificate& cert) {
    for (const auto& [eid, e] : d.graph.edges) {
        (void)e;
        if (d.edge_seq(eid).empty()) continue;
        const Id& B = cert.special.at(eid);
        if (!d.is_endpoint(eid, B)) continue;

        // crossing on b nearest its special vertex B
        Id x = seq_from(d, eid, B).front();
        Id g = d.other_edge(x, eid);
        if (!d.is_endpoint(g, B))
            throw internal_contradiction("certificate names " + B + " special of " + eid +
                                         " but crossing edge " + g + " misses it");
        Id W = d.other_endpoint(g, B);
        Side side = departure_side_toward(d, x, eid, W);
        RouteSpec route{g,
                        {ShadowSeg{eid, Anchor::vertex(B), Anchor::crossing(x), side},
                         TailSeg{Anchor::crossing(x), Anchor::vertex(W)}},
                        {}};
        return apply_route(d, cert, Rule::incident_special, std::move(route));
    }
    return std::nullopt;
}

std::optional<StepResult> multi_crossing_step(const Drawing& d, const FanCertificate& cert) {
    for (const auto& [bid, be] : d.graph.edges) {
        if (d.edge_seq(bid).empty()) continue;
        const Id& B = cert.special.at(bid);
        if (d.is_endpoint(bid, B)) continue; // the incident-special step handles these

        IdMap<int> multiplicity;
        bool multi = false;
        for (const Id& cid : d.edge_seq(bid))
            if (++multiplicity[d.other_edge(cid, bid)] >= 2) multi = true;
        if (!multi) continue;

        // Traverse b from G to R until the second crossing of an edge g is
        // encountered whose first crossing appeared before it; if the first
        // orientation fails, exchange the roles of R and G.
        for (int pass = 0; pass < 2; ++pass) {
            Id G = pass == 0 ? be.tail : be.head;
            Id R = pass == 0 ? be.head : be.tail;
            std::vector<Id> walk = seq_from(d, bid, G);
            std::map<Id, int> walk_pos;
            for (size_t i = 0; i < walk.size(); ++i) walk_pos[walk[i]] = static_cast<int>(i);

            for (size_t i = 0; i < walk.size(); ++i) {
                const Id& y = walk[i];
                Id g = d.other_edge(y, bid);
                // index of y among g's crossings with b, counted along g from B
                std::vector<Id> with_b;
                for (const Id& cid : seq_from(d, g, B))
                    if (d.other_edge(cid, g) == bid) with_b.push_back(cid);
                auto pos = std::find(with_b.begin(), with_b.end(), y);
                if (pos == with_b.end() || pos - with_b.begin() != 1) continue;
                const Id& x = with_b.front();
                if (walk_pos[x] > static_cast<int>(i)) continue;

                // z: first crossing on b walking from y toward G
                const Id& z = walk[i - 1];
                Id p = d.other_edge(z, bid);
                // Proposition: z is the first crossing of p with b from B
                for (const Id& cid : seq_from(d, p, B)) {
                    if (d.other_edge(cid, p) != bid) continue;
                    if (cid != z)
                        throw internal_contradiction("multi-crossing step: " + z + " is not the first crossing of " +
                                                     p + " with " + bid);
                    break;
                }
                Id W = d.other_endpoint(g, B);
                Side s1 = departure_side_toward(d, y, bid, B);
                RouteSpec route;
                route.target = g;
                route.segments.push_back(TailSeg{Anchor::vertex(W), Anchor::crossing(y)});
                if (p == g) {
                    if (z != x)
                        throw internal_contradiction("multi-crossing step: expected z = x when p = g");
                    route.segments.push_back(
                        ShadowSeg{bid, Anchor::crossing(y), Anchor::crossing(x), s1});
                    route.segments.push_back(TailSeg{Anchor::crossing(x), Anchor::vertex(B)});
                } else {
                    // the corridor side along b must agree with the turn at z
                    Side need = departure_side_toward(d, z, bid, B);
                    if (s1 != need)
                        throw internal_contradiction("multi-crossing step: corridor side mismatch between " + y +
                                                     " and " + z);
                    Side s2 = departure_side_toward(d, z, p, R);
                    route.segments.push_back(
                        ShadowSeg{bid, Anchor::crossing(y), Anchor::crossing(z), s1});
                    route.segments.push_back(
                        ShadowSeg{p, Anchor::crossing(z), Anchor::vertex(B), s2});
                }
                StepResult res = apply_route(d, cert, Rule::multi_crossing, std::move(route));
                check_injection(d, res.drawing, res.record);
                return res;
            }
        }
        throw internal_contradiction("multi-crossing step: edge " + bid +
                                     " has a multi-crossing partner but no pivot was found");
    }
    return std::nullopt;
}

NormalizeResult normalize(const Drawing& d, const StepObserver& observer) {
    FanOutcome outcome = check_fan_planar(d);
    if (!outcome.ok())
        throw invalid_drawing_error("normalize requires a fan-planar drawing (edge " +
                                    outcome.violation->edge + ")");
    NormalizeResult res{d, *outcome.cert, {}};
    while (true) {
        std::optional<StepResult> step = incident_special_step(res.drawing, res.cert);
        if (!step) step = multi_crossing_step(res.drawing, res.cert);
        if (!step) break;
        res.drawing = std::move(step->drawing);
        res.cert = std::move(step->cert);
        res.trace.steps.push_back(step->record);
        if (observer) observer(res.drawing, step->record);
    }
    res.cert = normalize_special_vertices(res.drawing, res.cert).cert;

    // normalized state: no pair crosses twice, no edge incident to its special
    std::map<std::pair<Id, Id>, int> pair_count;
    for (const auto& [cid, c] : res.drawing.crossings) {
        (void)cid;
        if (++pair_count[{c.first, c.second}] > 1)
            throw internal_contradiction("normalize left a pair crossing twice: " + c.first +
                                         "/" + c.second);
    }
    for (const auto& [eid, sp] : res.cert.special)
        if (!res.drawing.edge_seq(eid).empty() && res.drawing.is_endpoint(eid, sp))
            throw internal_contradiction("normalize left crossed edge " + eid +
                                         " incident to its special vertex");
    return res;
}

} // namespace fanplan

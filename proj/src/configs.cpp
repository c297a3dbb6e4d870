#include "fanplan/configs.hpp"

#include <optional>

#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

std::optional<Id> shared_vertex(const Drawing& d, const Id& e, const Id& f) {
    const Edge& a = d.edge(e);
    const Edge& b = d.edge(f);
    if (a.tail == b.tail || a.tail == b.head) return a.tail;
    if (a.head == b.tail || a.head == b.head) return a.head;
    return std::nullopt;
}

void require_valid(const Drawing& d) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok) throw invalid_drawing_error("invalid drawing: " + rep.violations.front());
}

} // namespace

ConfigReport detect_configurations(const Drawing& d) {
    require_valid(d);
    ConfigReport rep;

    // S1: every crossing of adjacent edges
    for (const auto& [cid, c] : d.crossings)
        if (shared_vertex(d, c.first, c.second)) rep.s1.push_back({c.first, c.second, cid});

    // S2: pairs crossing at least twice
    std::map<std::pair<Id, Id>, std::vector<Id>> per_pair;
    for (const auto& [cid, c] : d.crossings) per_pair[{c.first, c.second}].push_back(cid);
    for (auto& [pair, cids] : per_pair) {
        if (cids.size() < 2) continue;
        // order along the first edge
        std::vector<Id> ordered;
        for (const Id& cid : d.edge_seq(pair.first))
            if (std::find(cids.begin(), cids.end(), cid) != cids.end()) ordered.push_back(cid);
        rep.s2.push_back({pair.first, pair.second, ordered});
    }

    // SF1 / SF2: scan each edge's distinct crossing partners
    for (const auto& [base, s] : d.seq) {
        IdMap<std::vector<Id>> by_partner; // partner edge -> crossings on base
        for (const Id& cid : s) by_partner[d.other_edge(cid, base)].push_back(cid);
        std::vector<Id> partners;
        for (const auto& [p, cids] : by_partner) {
            (void)cids;
            partners.push_back(p);
        }
        for (size_t i = 0; i < partners.size(); ++i) {
            for (size_t j = i + 1; j < partners.size(); ++j) {
                const Id& c1 = partners[i];
                const Id& c2 = partners[j];
                auto shared = shared_vertex(d, c1, c2);
                if (!shared) {
                    rep.sf1.push_back({base, c1, c2});
                    continue;
                }
                // signs on base with both partners oriented toward the
                // shared endpoint must agree
                std::optional<std::pair<Id, Sign>> plus, minus;
                for (const Id& p : {c1, c2}) {
                    for (const Id& cid : by_partner[p]) {
                        Sign sg = crossing_sign(d, cid, base, *shared);
                        if (sg > 0 && !plus) plus = {cid, sg};
                        if (sg < 0 && !minus) minus = {cid, sg};
                    }
                }
                if (plus && minus)
                    rep.sf2.push_back({base, c1, c2, *shared, plus->first, minus->first});
            }
        }
    }
    return rep;
}

bool is_simple(const Drawing& d) {
    ConfigReport rep = detect_configurations(d);
    return rep.s1.empty() && rep.s2.empty();
}

} // namespace fanplan

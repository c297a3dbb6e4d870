#include "fanplan/recheck.hpp"

#include <sstream>

#include "fanplan/fan.hpp"
#include "fanplan/geometry.hpp"

namespace fanplan {

RecheckReport geometric_recheck(const Drawing& d, const LayoutResult& l) {
    RecheckReport rep;

    // read the drawing back from coordinates alone
    PolySpec spec;
    spec.vertices = l.vertex_pos;
    for (const auto& [eid, e] : d.graph.edges) {
        const Polyline& poly = l.polylines.at(eid);
        PolyEdge pe{e.tail, e.head, {}};
        for (size_t i = 1; i + 1 < poly.size(); ++i) pe.via.push_back(poly[i]);
        spec.edges[eid] = pe;
    }
    Drawing geo = from_polylines(spec); // throws degenerate_geometry if unreadable

    // per-edge crossing structure: partner sequence plus relative signs
    for (const auto& [eid, e] : d.graph.edges) {
        (void)e;
        auto tokens = [&](const Drawing& dr) {
            std::vector<std::pair<Id, Sign>> out;
            for (const Id& cid : dr.edge_seq(eid))
                out.push_back({dr.other_edge(cid, eid), sign_relative_to(dr.crossing(cid), eid)});
            return out;
        };
        auto want = tokens(d);
        auto got = tokens(geo);
        if (want != got) {
            std::ostringstream os;
            os << "edge " << eid << ": combinatorial crossings [";
            for (auto& [o, s] : want) os << " " << o << (s > 0 ? "+" : "-");
            os << " ] but geometry reads [";
            for (auto& [o, s] : got) os << " " << o << (s > 0 ? "+" : "-");
            os << " ]";
            rep.fail(os.str());
        }
    }

    // fan-planarity verdict re-derived from the geometric reading
    FanOutcome verdict = check_fan_planar(d);
    FanOutcome geo_verdict = check_fan_planar(geo);
    if (verdict.ok() != geo_verdict.ok()) {
        rep.fail("fan-planarity verdicts disagree: combinatorial " +
                 std::string(verdict.ok() ? "yes" : "no") + ", geometric " +
                 std::string(geo_verdict.ok() ? "yes" : "no"));
    } else if (verdict.ok()) {
        if (!(verdict.cert->special == geo_verdict.cert->special))
            rep.fail("special-vertex assignments disagree");
    } else {
        if (verdict.violation->edge != geo_verdict.violation->edge ||
            verdict.violation->reason != geo_verdict.violation->reason)
            rep.fail("fan violations disagree (" + verdict.violation->edge + " vs " +
                     geo_verdict.violation->edge + ")");
    }
    return rep;
}

} // namespace fanplan

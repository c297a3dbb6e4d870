#include "fanplan/reroute.hpp"

#include <algorithm>
#include <sstream>

#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

struct EventKept {
    Id cid;
};
struct EventNew {
    Id followed;
    Id src;   // the followed edge's crossing the corridor passes
    Side side;
    int dir_f; // corridor travel direction relative to followed's reference
};
using Event = std::variant<EventKept, EventNew>;

// coordinate along an edge: tail = 0, i-th crossing = i, head = len+1
int anchor_coord(const Drawing& d, const Id& edge, const Anchor& a) {
    const Edge& e = d.edge(edge);
    int len = static_cast<int>(d.edge_seq(edge).size());
    if (a.is_vertex) {
        if (a.id == e.tail) return 0;
        if (a.id == e.head) return len + 1;
        throw route_error("anchor " + a.token() + " is not an endpoint of " + edge);
    }
    try {
        return d.position(edge, a.id);
    } catch (const lookup_error& err) {
        throw route_error(err.what());
    }
}

// Side of `base` on which the crossing's other edge lies immediately after
// passing c, travelling that other edge in direction `travel` relative to
// its reference orientation.
Side side_beyond(const Drawing& d, const Id& c, const Id& base, int travel) {
    Side ref_dep = ref_departure_side(d.crossing(c), base);
    return travel > 0 ? ref_dep : opposite(ref_dep);
}

const Anchor& seg_from(const Segment& s) {
    return std::holds_alternative<TailSeg>(s) ? std::get<TailSeg>(s).from
                                              : std::get<ShadowSeg>(s).from;
}
const Anchor& seg_to(const Segment& s) {
    return std::holds_alternative<TailSeg>(s) ? std::get<TailSeg>(s).to
                                              : std::get<ShadowSeg>(s).to;
}

struct Walk {
    std::vector<Event> events;
    IdSet removed;
    int route_dir = +1; // +1 when the route starts at the target's tail
    Id start_vertex, end_vertex;
};

Walk walk_route(const Drawing& d, const RouteSpec& spec) {
    if (!d.graph.has_edge(spec.target)) throw route_error("unknown target edge " + spec.target);
    if (spec.segments.empty()) throw route_error("empty route");
    const Edge& target = d.edge(spec.target);

    const Anchor& first = seg_from(spec.segments.front());
    const Anchor& last = seg_to(spec.segments.back());
    if (!first.is_vertex || !last.is_vertex)
        throw route_error("route must start and end at the target's endpoints");
    if (!((first.id == target.tail && last.id == target.head) ||
          (first.id == target.head && last.id == target.tail)))
        throw route_error("route endpoints do not match the target's endpoints");

    Walk w;
    w.start_vertex = first.id;
    w.end_vertex = last.id;
    w.route_dir = first.id == target.tail ? +1 : -1;

    // travel direction of each segment along its carrying edge's reference
    std::vector<int> dir(spec.segments.size());
    for (size_t i = 0; i < spec.segments.size(); ++i) {
        const Segment& s = spec.segments[i];
        Id carrier = std::holds_alternative<TailSeg>(s) ? spec.target
                                                        : std::get<ShadowSeg>(s).followed;
        if (std::holds_alternative<ShadowSeg>(s) && carrier == spec.target)
            throw route_error("shadow segment may not follow the target itself");
        int c1 = anchor_coord(d, carrier, seg_from(s));
        int c2 = anchor_coord(d, carrier, seg_to(s));
        if (c1 == c2) throw route_error("zero-length segment on " + carrier);
        dir[i] = c2 > c1 ? +1 : -1;
        if (i > 0 && !(seg_from(s) == seg_to(spec.segments[i - 1])))
            throw route_error("segments do not chain at " + seg_from(s).token());
        if (i > 0 && seg_from(s).is_vertex)
            throw route_error("interior anchor " + seg_from(s).token() + " must be a crossing");
    }

    // whether each junction anchor crossing of the target is kept, derived
    // from the adjacent shadow's side
    auto junction = [&](size_t i) { // between segments i and i+1
        const Segment& a = spec.segments[i];
        const Segment& b = spec.segments[i + 1];
        const Anchor& anchor = seg_to(a);
        const Id& cid = anchor.id;
        const Crossing& c = d.crossing(cid);
        bool a_tail = std::holds_alternative<TailSeg>(a);
        bool b_tail = std::holds_alternative<TailSeg>(b);
        if (a_tail && b_tail) throw route_error("tail-tail junction at " + anchor.token());

        if (a_tail || b_tail) {
            // junction between the target's old curve and a corridor: the
            // anchor is a crossing of the target with the followed edge
            const ShadowSeg& sh = std::get<ShadowSeg>(a_tail ? b : a);
            if (d.other_edge(cid, spec.target) != sh.followed)
                throw route_error("junction " + anchor.token() + " does not join target and " +
                                  sh.followed);
            int tail_dir = dir[a_tail ? i : i + 1];
            Side beyond = side_beyond(d, cid, sh.followed, tail_dir);
            // tail arriving (kept: corridor continues on the far side);
            // tail leaving (kept: corridor approached on the near side)
            Side kept_side = a_tail ? beyond : opposite(beyond);
            if (sh.side == kept_side) {
                w.events.push_back(EventKept{cid});
            } else {
                w.removed.insert(cid);
            }
            return;
        }

        // corridor-to-corridor turn through one quadrant of the junction
        const ShadowSeg& s1 = std::get<ShadowSeg>(a);
        const ShadowSeg& s2 = std::get<ShadowSeg>(b);
        IdSet ce = {c.first, c.second};
        if (!(ce == IdSet{std::min(s1.followed, s2.followed, ShortLex{}),
                          std::max(s1.followed, s2.followed, ShortLex{})}))
            throw route_error("junction " + anchor.token() + " does not join the followed edges");
        Side need1 = side_beyond(d, cid, s1.followed, dir[i + 1]);
        if (s1.side != need1)
            throw route_error("corridor along " + s1.followed + " on the wrong side at " +
                              anchor.token());
        Side need2 = opposite(side_beyond(d, cid, s2.followed, dir[i]));
        if (s2.side != need2)
            throw route_error("corridor along " + s2.followed + " on the wrong side at " +
                              anchor.token());
    };

    IdSet new_srcs;
    for (size_t i = 0; i < spec.segments.size(); ++i) {
        const Segment& s = spec.segments[i];
        if (std::holds_alternative<TailSeg>(s)) {
            const TailSeg& t = std::get<TailSeg>(s);
            int c1 = anchor_coord(d, spec.target, t.from);
            int c2 = anchor_coord(d, spec.target, t.to);
            const auto& sq = d.edge_seq(spec.target);
            if (c1 < c2)
                for (int k = c1 + 1; k < c2; ++k) w.events.push_back(EventKept{sq[k - 1]});
            else
                for (int k = c1 - 1; k > c2; --k) w.events.push_back(EventKept{sq[k - 1]});
        } else {
            const ShadowSeg& sh = std::get<ShadowSeg>(s);
            int c1 = anchor_coord(d, sh.followed, sh.from);
            int c2 = anchor_coord(d, sh.followed, sh.to);
            const auto& sq = d.edge_seq(sh.followed);
            auto visit = [&](int k) {
                const Id& src = sq[k - 1];
                if (d.other_edge(src, sh.followed) == spec.target) return; // dies with the old curve
                if (!new_srcs.insert(src).second)
                    throw route_error("corridor spans overlap at crossing " + src);
                w.events.push_back(EventNew{sh.followed, src, sh.side, dir[i]});
            };
            if (c1 < c2)
                for (int k = c1 + 1; k < c2; ++k) visit(k);
            else
                for (int k = c1 - 1; k > c2; --k) visit(k);
        }
        if (i + 1 < spec.segments.size()) junction(i);
    }

    // everything not kept is removed
    IdSet kept;
    for (const Event& ev : w.events)
        if (std::holds_alternative<EventKept>(ev)) kept.insert(std::get<EventKept>(ev).cid);
    for (const Id& cid : d.edge_seq(spec.target))
        if (!kept.count(cid)) w.removed.insert(cid);
    return w;
}

} // namespace

std::string describe(const RouteSpec& spec) {
    std::ostringstream os;
    os << spec.target << " :=";
    for (const Segment& s : spec.segments) {
        if (std::holds_alternative<TailSeg>(s)) {
            const TailSeg& t = std::get<TailSeg>(s);
            os << " tail(" << t.from.token() << ".." << t.to.token() << ")";
        } else {
            const ShadowSeg& sh = std::get<ShadowSeg>(s);
            os << " shadow(" << sh.followed << "," << sh.from.token() << ".." << sh.to.token()
               << "," << to_string(sh.side) << ")";
        }
    }
    if (!spec.removed.empty()) {
        os << " removed{";
        bool firstItem = true;
        for (const Id& c : spec.removed) {
            if (!firstItem) os << ",";
            os << c;
            firstItem = false;
        }
        os << "}";
    }
    return os.str();
}

IdSet route_removed(const Drawing& d, const RouteSpec& spec) {
    return walk_route(d, spec).removed;
}

Drawing reroute_edge(const Drawing& d, const RouteSpec& spec) {
    Walk w = walk_route(d, spec);
    if (w.removed != spec.removed) {
        std::string msg = "removed-set mismatch, route deletes {";
        for (const Id& c : w.removed) msg += " " + c;
        msg += " }";
        throw route_error(msg);
    }

    Drawing nd = d;
    const Edge target = d.edge(spec.target);

    // delete old crossings of the target not kept
    for (const Id& cid : w.removed) {
        const Id other = d.other_edge(cid, spec.target);
        auto& s = nd.seq[other];
        s.erase(std::find(s.begin(), s.end(), cid));
        nd.crossings.erase(cid);
    }

    // assemble the new curve in route order
    int counter = 0;
    auto fresh = [&]() {
        while (true) {
            Id c = "x" + std::to_string(++counter);
            if (!nd.crossings.count(c)) return c;
        }
    };
    std::vector<Id> new_seq;
    for (const Event& ev : w.events) {
        if (std::holds_alternative<EventKept>(ev)) {
            new_seq.push_back(std::get<EventKept>(ev).cid);
            continue;
        }
        const EventNew& n = std::get<EventNew>(ev);
        const Crossing& src = d.crossing(n.src);
        const Id other = d.other_edge(n.src, n.followed);
        Sign how_other_crosses_followed = sign_relative_to(src, n.followed);
        // the other edge's reference orientation reaches the corridor just
        // before src iff it arrives on the corridor's side
        Side ref_arrival = opposite(how_other_crosses_followed > 0 ? Side::right : Side::left);
        bool before = ref_arrival == n.side;
        int u = n.dir_f * w.route_dir; // target's local direction vs followed's
        Sign how_other_crosses_target = how_other_crosses_followed * u;

        Id cid = fresh();
        Id lo = std::min(spec.target, other, ShortLex{});
        Id hi = std::max(spec.target, other, ShortLex{});
        Sign stored = lo == spec.target ? how_other_crosses_target : -how_other_crosses_target;
        nd.crossings[cid] = {cid, lo, hi, stored};

        auto& s = nd.seq[other];
        auto it = std::find(s.begin(), s.end(), n.src);
        s.insert(before ? it : std::next(it), cid);
        new_seq.push_back(cid);
    }
    if (w.route_dir < 0) std::reverse(new_seq.begin(), new_seq.end());
    nd.seq[spec.target] = std::move(new_seq);

    // rotations at the target's endpoints: a terminal corridor re-slots the
    // target's dart next to the followed edge's dart on the corridor side
    auto fix_end = [&](const Segment& seg, const Id& v) {
        if (std::holds_alternative<TailSeg>(seg)) return; // old curve reused at v
        const ShadowSeg& sh = std::get<ShadowSeg>(seg);
        auto& rot = nd.rot[v];
        Dart tdart{spec.target, v == target.tail};
        auto it = std::find(rot.begin(), rot.end(), tdart);
        if (it == rot.end()) throw route_error("target dart missing in rotation at " + v);
        rot.erase(it);
        const Edge& fe = d.edge(sh.followed);
        Dart fdart{sh.followed, v == fe.tail};
        auto fit = std::find(rot.begin(), rot.end(), fdart);
        if (fit == rot.end())
            throw route_error("followed edge " + sh.followed + " not incident to " + v);
        bool f_at_tail = v == fe.tail;
        bool insert_after = f_at_tail ? sh.side == Side::left : sh.side == Side::right;
        rot.insert(insert_after ? std::next(fit) : fit, tdart);
    };
    fix_end(spec.segments.front(), w.start_vertex);
    fix_end(spec.segments.back(), w.end_vertex);

    canonicalize_rotations(nd);
    ValidationReport rep = validate_drawing(nd);
    if (!rep.ok)
        throw internal_contradiction("post-validation failure after rerouting " + spec.target +
                                     ": " + rep.violations.front());
    return nd;
}

} // namespace fanplan

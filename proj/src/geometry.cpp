#include "fanplan/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

struct Contact {
    Vec2 point;
    double param1, param2;
};

double seg_len(Vec2 a, Vec2 b) { return dist(a, b); }

// Direction of the polyline at arclength param, looking forward (+1) or
// backward (-1), skipping zero-length segments.
Vec2 direction_at(const Polyline& poly, double param, int look, double tol) {
    double acc = 0.0;
    std::vector<std::pair<double, int>> breakpoints; // arclength, segment idx
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        breakpoints.push_back({acc, static_cast<int>(i)});
        acc += seg_len(poly[i], poly[i + 1]);
    }
    // segment containing param, nudged in the look direction
    double p = param + look * 4 * tol;
    p = std::max(0.0, std::min(acc, p));
    int seg = 0;
    for (auto& [start, idx] : breakpoints) {
        double len = seg_len(poly[idx], poly[idx + 1]);
        if (p >= start - tol && p <= start + len + tol) seg = idx;
        if (p < start) break;
    }
    Vec2 dir = poly[seg + 1] - poly[seg];
    double n = norm(dir);
    if (n < tol) throw degenerate_geometry("zero-length polyline segment");
    Vec2 unit{dir.x / n, dir.y / n};
    return look > 0 ? unit : Vec2{-unit.x, -unit.y};
}

// All contact points between two polylines, parameterized by arclength.
std::vector<Contact> polyline_contacts(const Polyline& a, const Polyline& b, double tol) {
    std::vector<Contact> raw;
    double acc_a = 0.0;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        Vec2 p = a[i], pd = a[i + 1] - a[i];
        double len_a = norm(pd);
        double acc_b = 0.0;
        for (size_t j = 0; j + 1 < b.size(); ++j) {
            Vec2 q = b[j], qd = b[j + 1] - b[j];
            double len_b = norm(qd);
            double det = cross(pd, qd);
            if (std::abs(det) > 1e-14) {
                double t = cross(q - p, qd) / det;
                double u = cross(q - p, pd) / det;
                if (t > -tol / std::max(len_a, tol) && t < 1 + tol / std::max(len_a, tol) &&
                    u > -tol / std::max(len_b, tol) && u < 1 + tol / std::max(len_b, tol)) {
                    Vec2 pt = p + t * pd;
                    raw.push_back({pt, acc_a + t * len_a, acc_b + u * len_b});
                }
            } else {
                // parallel: any overlap beyond touching endpoints is degenerate
                double d1 = std::abs(cross(pd, q - p)) / std::max(len_a, tol);
                if (d1 < tol) {
                    double t0 = dot(q - p, pd) / dot(pd, pd);
                    double t1 = dot(q + qd - p, pd) / dot(pd, pd);
                    double lo = std::min(t0, t1), hi = std::max(t0, t1);
                    double margin = 2 * tol / std::max(len_a, tol);
                    if (hi > margin && lo < 1 - margin)
                        throw degenerate_geometry("collinear overlapping polylines");
                }
            }
            acc_b += len_b;
        }
        acc_a += len_a;
    }
    // merge hits at the same point (breakpoint contacts appear up to 4 times)
    std::vector<Contact> merged;
    std::sort(raw.begin(), raw.end(), [](const Contact& x, const Contact& y) {
        return x.param1 < y.param1;
    });
    for (const Contact& c : raw) {
        bool dup = false;
        for (const Contact& m : merged)
            if (dist(m.point, c.point) < 8 * tol) dup = true;
        if (!dup) merged.push_back(c);
    }
    return merged;
}

} // namespace

std::vector<GeoCrossing> extract_crossings(
    const IdMap<Polyline>& polylines,
    const std::function<std::vector<Vec2>(const Id&, const Id&)>& shared_vertex_at,
    double tol) {
    std::vector<GeoCrossing> out;

    // each polyline must be a simple curve
    for (const auto& [eid, poly] : polylines) {
        for (size_t i = 0; i + 1 < poly.size(); ++i) {
            for (size_t j = i + 1; j + 1 < poly.size(); ++j) {
                Vec2 p = poly[i], pd = poly[i + 1] - poly[i];
                Vec2 q = poly[j], qd = poly[j + 1] - poly[j];
                if (norm(pd) < tol || norm(qd) < tol)
                    throw degenerate_geometry("edge " + eid + " has a zero-length segment");
                if (j == i + 1) {
                    // consecutive segments share a point; folding back onto
                    // the previous segment is the only illegal shape
                    if (std::abs(cross(pd, qd)) < 1e-12 && dot(pd, qd) < 0)
                        throw degenerate_geometry("edge " + eid + " folds back on itself");
                    continue;
                }
                double det = cross(pd, qd);
                if (std::abs(det) < 1e-14) {
                    if (std::abs(cross(pd, q - p)) / norm(pd) >= tol) continue;
                    double t0 = dot(q - p, pd) / dot(pd, pd);
                    double t1 = dot(q + qd - p, pd) / dot(pd, pd);
                    double lo = std::min(t0, t1), hi = std::max(t0, t1);
                    double m = 2 * tol / std::max(norm(pd), tol);
                    if (hi > m && lo < 1 - m)
                        throw degenerate_geometry("edge " + eid + " self-overlaps");
                    continue;
                }
                double t = cross(q - p, qd) / det;
                double u = cross(q - p, pd) / det;
                double mt = tol / std::max(norm(pd), tol);
                double mu = tol / std::max(norm(qd), tol);
                bool closed_ends = i == 0 && j + 2 == poly.size() &&
                                   dist(poly.front(), poly.back()) < tol;
                if (closed_ends) continue; // never the case for edge curves
                if (t > -mt && t < 1 + mt && u > -mu && u < 1 + mu)
                    throw degenerate_geometry("edge " + eid + " self-intersects");
            }
        }
    }

    for (auto it1 = polylines.begin(); it1 != polylines.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != polylines.end(); ++it2) {
            const Id& e1 = it1->first;
            const Id& e2 = it2->first;
            std::vector<Vec2> allowed = shared_vertex_at(e1, e2);
            for (const Contact& c : polyline_contacts(it1->second, it2->second, tol)) {
                bool at_shared = false;
                for (Vec2 v : allowed)
                    if (dist(v, c.point) < 8 * tol) at_shared = true;
                if (at_shared) continue;

                // four rays around the contact; transversal iff they
                // alternate between the two edges going around
                Vec2 a_fwd = direction_at(it1->second, c.param1, +1, tol);
                Vec2 a_bwd = direction_at(it1->second, c.param1, -1, tol);
                Vec2 b_fwd = direction_at(it2->second, c.param2, +1, tol);
                Vec2 b_bwd = direction_at(it2->second, c.param2, -1, tol);
                struct Ray {
                    double angle;
                    int tag; // 0: a_fwd, 1: a_bwd, 2: b_fwd, 3: b_bwd
                };
                std::vector<Ray> rays = {{std::atan2(a_fwd.y, a_fwd.x), 0},
                                         {std::atan2(a_bwd.y, a_bwd.x), 1},
                                         {std::atan2(b_fwd.y, b_fwd.x), 2},
                                         {std::atan2(b_bwd.y, b_bwd.x), 3}};
                std::sort(rays.begin(), rays.end(),
                          [](const Ray& x, const Ray& y) { return x.angle < y.angle; });
                for (int i = 0; i < 4; ++i)
                    if (std::abs(rays[i].angle - rays[(i + 1) % 4].angle) < 1e-12 ||
                        std::abs(std::abs(rays[i].angle - rays[(i + 1) % 4].angle) - 2 * M_PI) < 1e-12)
                        throw degenerate_geometry("tangential contact between " + e1 + " and " + e2);
                int start = 0;
                while (rays[start].tag >= 2) start++;
                bool alternating = rays[(start + 1) % 4].tag >= 2 && rays[(start + 2) % 4].tag < 2 &&
                                   rays[(start + 3) % 4].tag >= 2;
                if (!alternating)
                    throw degenerate_geometry("non-transversal contact between " + e1 + " and " + e2);

                // ccw successor of a_fwd decides the sign: b backward means
                // e2 crosses e1 left to right (+1)
                int pos_afwd = 0;
                while (rays[pos_afwd].tag != 0) pos_afwd++;
                Sign sign = rays[(pos_afwd + 1) % 4].tag == 3 ? +1 : -1;
                out.push_back({e1, e2, c.point, c.param1, c.param2, sign});
            }
        }
    }

    // triple points: all crossing points pairwise distinct
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (dist(out[i].point, out[j].point) < 8 * tol)
                throw degenerate_geometry("three edges share a common crossing");
    return out;
}

Drawing from_polylines(const PolySpec& spec) {
    const double tol = 1e-9;
    Drawing d;
    for (const auto& [v, pos] : spec.vertices) {
        (void)pos;
        auto lab = spec.labels.find(v);
        d.graph.vertices[v] = lab == spec.labels.end() ? "" : lab->second;
    }
    IdMap<Polyline> polylines;
    for (const auto& [eid, pe] : spec.edges) {
        d.graph.edges[eid] = {eid, pe.tail, pe.head};
        Polyline poly;
        poly.push_back(spec.vertices.at(pe.tail));
        for (Vec2 w : pe.via) poly.push_back(w);
        poly.push_back(spec.vertices.at(pe.head));
        polylines[eid] = std::move(poly);
    }

    auto shared_at = [&](const Id& e1, const Id& e2) {
        std::vector<Vec2> pts;
        const PolyEdge& a = spec.edges.at(e1);
        const PolyEdge& b = spec.edges.at(e2);
        for (const Id& v : {a.tail, a.head})
            if (v == b.tail || v == b.head) pts.push_back(spec.vertices.at(v));
        return pts;
    };
    std::vector<GeoCrossing> geo = extract_crossings(polylines, shared_at, tol);

    // no edge may pass through a vertex
    for (const GeoCrossing& g : geo)
        for (const auto& [v, pos] : spec.vertices)
            if (dist(pos, g.point) < 8 * tol)
                throw degenerate_geometry("crossing of " + g.e1 + "/" + g.e2 + " at vertex " + v);

    // deterministic crossing names
    std::sort(geo.begin(), geo.end(), [](const GeoCrossing& a, const GeoCrossing& b) {
        if (a.e1 != b.e1) return id_less(a.e1, b.e1);
        if (a.param1 != b.param1) return a.param1 < b.param1;
        return id_less(a.e2, b.e2);
    });
    auto name = spec.crossing_name ? spec.crossing_name
                                   : [](int i) { return "x" + std::to_string(i + 1); };
    struct Placed {
        Id id;
        double param;
    };
    IdMap<std::vector<Placed>> on_edge;
    for (size_t i = 0; i < geo.size(); ++i) {
        Id cid = name(static_cast<int>(i));
        d.crossings[cid] = {cid, geo[i].e1, geo[i].e2, geo[i].sign};
        on_edge[geo[i].e1].push_back({cid, geo[i].param1});
        on_edge[geo[i].e2].push_back({cid, geo[i].param2});
    }
    for (const auto& [eid, pe] : spec.edges) {
        (void)pe;
        auto& placed = on_edge[eid];
        std::sort(placed.begin(), placed.end(),
                  [](const Placed& a, const Placed& b) { return a.param < b.param; });
        std::vector<Id>& s = d.seq[eid];
        for (const Placed& p : placed) s.push_back(p.id);
    }

    // rotations: angular ccw order of first segments
    for (const auto& [v, pos] : spec.vertices) {
        struct Out {
            Dart dart;
            double angle;
        };
        std::vector<Out> outs;
        for (const auto& [eid, pe] : spec.edges) {
            const Polyline& poly = polylines.at(eid);
            if (pe.tail == v) {
                Vec2 dir = poly[1] - poly[0];
                outs.push_back({{eid, true}, std::atan2(dir.y, dir.x)});
            }
            if (pe.head == v) {
                Vec2 dir = poly[poly.size() - 2] - poly[poly.size() - 1];
                outs.push_back({{eid, false}, std::atan2(dir.y, dir.x)});
            }
        }
        std::sort(outs.begin(), outs.end(), [](const Out& a, const Out& b) { return a.angle < b.angle; });
        for (size_t i = 0; i + 1 < outs.size(); ++i)
            if (outs[i + 1].angle - outs[i].angle < 1e-12)
                throw degenerate_geometry("coincident edge directions at vertex " + v);
        std::vector<Dart>& r = d.rot[v];
        for (const Out& o : outs) r.push_back(o.dart);
    }

    canonicalize_rotations(d);
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok)
        throw internal_contradiction("from_polylines produced invalid drawing: " + rep.violations.front());
    return d;
}

} // namespace fanplan

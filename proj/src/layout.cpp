#include "fanplan/layout.hpp"

#include <algorithm>
#include <cmath>

#include "fanplan/errors.hpp"
#include "fanplan/faces.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

constexpr double kTol = 1e-9;

// Conjugate gradient for the pinned graph Laplacian, matrix-free.
struct Laplacian {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<double> weight;
    std::vector<double> degree;

    void add(int a, int b, double w) {
        edges.push_back({a, b});
        weight.push_back(w);
        degree[a] += w;
        degree[b] += w;
    }
};

std::vector<double> cg_solve(const Laplacian& lap, const std::vector<bool>& pinned,
                             const std::vector<double>& pin_value) {
    int n = lap.n;
    std::vector<double> x(n, 0.0), b(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (pinned[i]) x[i] = pin_value[i];
    // rhs: contributions of pinned neighbours; system solved on free nodes
    for (size_t k = 0; k < lap.edges.size(); ++k) {
        auto [i, j] = lap.edges[k];
        if (pinned[j] && !pinned[i]) b[i] += lap.weight[k] * pin_value[j];
        if (pinned[i] && !pinned[j]) b[j] += lap.weight[k] * pin_value[i];
    }
    auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) out[i] = pinned[i] ? 0.0 : lap.degree[i] * v[i];
        for (size_t k = 0; k < lap.edges.size(); ++k) {
            auto [i, j] = lap.edges[k];
            if (!pinned[i] && !pinned[j]) {
                out[i] -= lap.weight[k] * v[j];
                out[j] -= lap.weight[k] * v[i];
            }
        }
    };
    std::vector<double> r(n, 0.0), p(n, 0.0), ap(n, 0.0), v(n, 0.0);
    for (int i = 0; i < n; ++i) v[i] = pinned[i] ? 0.0 : x[i];
    apply(v, ap);
    double rr = 0;
    for (int i = 0; i < n; ++i) {
        if (pinned[i]) continue;
        r[i] = b[i] - ap[i];
        p[i] = r[i];
        rr += r[i] * r[i];
    }
    for (int iter = 0; iter < 20000 && rr > 1e-24; ++iter) {
        apply(p, ap);
        double pap = 0;
        for (int i = 0; i < n; ++i)
            if (!pinned[i]) pap += p[i] * ap[i];
        if (pap <= 0) break;
        double alpha = rr / pap;
        double rr2 = 0;
        for (int i = 0; i < n; ++i) {
            if (pinned[i]) continue;
            v[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
            rr2 += r[i] * r[i];
        }
        double beta = rr2 / rr;
        rr = rr2;
        for (int i = 0; i < n; ++i)
            if (!pinned[i]) p[i] = r[i] + beta * p[i];
    }
    for (int i = 0; i < n; ++i)
        if (!pinned[i]) x[i] = v[i];
    return x;
}

bool segments_improper(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2, bool share_node) {
    Vec2 pd = p2 - p1, qd = q2 - q1;
    double det = cross(pd, qd);
    double len_p = norm(pd), len_q = norm(qd);
    if (len_p < kTol || len_q < kTol) return true;
    if (std::abs(det) < 1e-14) {
        if (std::abs(cross(pd, q1 - p1)) / len_p > kTol) return false;
        double t0 = dot(q1 - p1, pd) / dot(pd, pd);
        double t1 = dot(q2 - p1, pd) / dot(pd, pd);
        double lo = std::min(t0, t1), hi = std::max(t0, t1);
        double m = 1e-7;
        return hi > m && lo < 1 - m;
    }
    double t = cross(q1 - p1, qd) / det;
    double u = cross(q1 - p1, pd) / det;
    double m = 1e-7;
    if (t <= -m || t >= 1 + m || u <= -m || u >= 1 + m) return false;
    bool interior = t > m && t < 1 - m && u > m && u < 1 - m;
    if (interior) return true;
    return !share_node;
}

// The straight-line picture of the subdivided planarization must realize the
// embedding: distinct nodes, ccw rotations matching, no improper contacts
// between half-arcs. Returns 0 ok, 1 mirrored, 2 broken.
struct HalfArc {
    PNode a;   // original planarization node
    int mid;   // aux index of the arc midpoint
    PDart dart;
};

int check_embedding(const Planarization& p, const std::vector<PNode>& nodes,
                    const std::map<PNode, Vec2>& pos, const std::map<PDart, Vec2>& mid_pos) {
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (dist(pos.at(nodes[i]), pos.at(nodes[j])) < kTol) return 2;

    int orientation = 0;
    for (const PNode& n : nodes) {
        const auto& rot = p.node_rot.at(n);
        if (rot.size() < 3) continue;
        std::vector<std::pair<double, size_t>> ang;
        for (size_t i = 0; i < rot.size(); ++i) {
            Vec2 dir = mid_pos.at(rot[i]) - pos.at(n);
            if (norm(dir) < kTol) return 2;
            ang.push_back({std::atan2(dir.y, dir.x), i});
        }
        std::sort(ang.begin(), ang.end());
        for (size_t i = 0; i + 1 < ang.size(); ++i)
            if (ang[i + 1].first - ang[i].first < 1e-12) return 2;
        size_t m = ang.size();
        size_t start = 0;
        while (start < m && ang[start].second != 0) ++start;
        bool fwd = true, bwd = true;
        for (size_t i = 0; i < m; ++i) {
            if (ang[(start + i) % m].second != i) fwd = false;
            if (ang[(start + m - i) % m].second != i) bwd = false;
        }
        int o = fwd ? +1 : bwd ? -1 : 0;
        if (o == 0) return 2;
        if (orientation == 0) orientation = o;
        if (orientation != o) return 2;
    }

    struct Seg {
        Vec2 a, b;
        int id_a, id_b; // shared-endpoint detection via synthetic ids
    };
    std::vector<Seg> segs;
    std::map<std::string, int> node_id;
    auto id_of = [&](const std::string& key) {
        auto it = node_id.find(key);
        if (it != node_id.end()) return it->second;
        int v = static_cast<int>(node_id.size());
        node_id[key] = v;
        return v;
    };
    for (const auto& [dart, src] : p.dart_source) {
        if (dart.dir < 0) continue;
        if (!pos.count(src)) continue;
        PNode to = p.target(dart);
        int m = id_of("m:" + dart.token());
        segs.push_back({pos.at(src), mid_pos.at(dart), id_of(src.token()), m});
        segs.push_back({mid_pos.at(dart), pos.at(to), m, id_of(to.token())});
    }
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            bool share = segs[i].id_a == segs[j].id_a || segs[i].id_a == segs[j].id_b ||
                         segs[i].id_b == segs[j].id_a || segs[i].id_b == segs[j].id_b;
            if (segments_improper(segs[i].a, segs[i].b, segs[j].a, segs[j].b, share)) return 2;
        }
    return orientation < 0 ? 1 : 0;
}

struct ComponentLayout {
    std::map<PNode, Vec2> pos;
    std::map<PDart, Vec2> mid; // keyed by the forward dart of the arc
};

// Subdivide every arc and every stellation spoke, stellate the resulting
// pentagons: a simple triangulation of the sphere, hence 3-connected, so the
// pinned barycentric solve is an embedding by Tutte's theorem.
std::optional<ComponentLayout> layout_component(const Planarization& p, const FaceSet& fs,
                                                const std::vector<PNode>& nodes,
                                                const std::vector<int>& face_ids, int outer) {
    Laplacian lap;
    std::map<std::string, int> index;
    auto ix = [&](const std::string& key) {
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int v = lap.n++;
        index[key] = v;
        lap.degree.push_back(0.0);
        return v;
    };
    for (const PNode& n : nodes) ix("n:" + n.token());
    // arc midpoints + half-arcs
    for (const auto& [dart, src] : p.dart_source) {
        if (dart.dir < 0) continue;
        if (!std::count(nodes.begin(), nodes.end(), src)) continue;
        int m = ix("m:" + dart.token());
        lap.add(ix("n:" + src.token()), m, 1.0);
        lap.add(m, ix("n:" + p.target(dart).token()), 1.0);
    }
    int pin_a = -1, pin_t = -1, pin_s = -1;
    for (int f : face_ids) {
        const Face& face = fs.faces[f];
        int apex = ix("A:" + std::to_string(f));
        // subdivided corner sequence: source node then arc midpoint per dart
        std::vector<int> corners;
        for (const PDart& dart : face.walk) {
            corners.push_back(ix("n:" + p.source(dart).token()));
            PDart fwd = dart.dir > 0 ? dart : dart.reversed();
            corners.push_back(ix("m:" + fwd.token()));
        }
        int m = static_cast<int>(corners.size());
        std::vector<int> spokes(m);
        for (int j = 0; j < m; ++j) {
            spokes[j] = ix("s:" + std::to_string(f) + ":" + std::to_string(j));
            lap.add(apex, spokes[j], 1.0);
            lap.add(spokes[j], corners[j], 1.0);
        }
        for (int j = 0; j < m; ++j) {
            int t = ix("T:" + std::to_string(f) + ":" + std::to_string(j));
            lap.add(t, apex, 1.0);
            lap.add(t, spokes[j], 1.0);
            lap.add(t, corners[j], 1.0);
            lap.add(t, corners[(j + 1) % m], 1.0);
            lap.add(t, spokes[(j + 1) % m], 1.0);
            if (f == outer && j == 0) {
                pin_a = apex;
                pin_t = t;
                pin_s = spokes[0];
            }
        }
    }
    if (pin_a < 0) return std::nullopt;

    // pin one triangle of the outer face's stellation
    std::vector<bool> pinned(lap.n, false);
    std::vector<double> px(lap.n, 0.0), py(lap.n, 0.0);
    pinned[pin_a] = pinned[pin_t] = pinned[pin_s] = true;
    px[pin_a] = 0.0;
    py[pin_a] = 0.0;
    px[pin_t] = 1.0;
    py[pin_t] = 0.0;
    px[pin_s] = 0.5;
    py[pin_s] = -0.8660254;

    std::vector<double> sx = cg_solve(lap, pinned, px);
    std::vector<double> sy = cg_solve(lap, pinned, py);

    ComponentLayout cl;
    for (const PNode& n : nodes) {
        int i = index.at("n:" + n.token());
        cl.pos[n] = {sx[i], sy[i]};
    }
    std::map<PDart, Vec2> mid_by_dart;
    for (const auto& [dart, src] : p.dart_source) {
        if (!std::count(nodes.begin(), nodes.end(), src)) continue;
        PDart fwd = dart.dir > 0 ? dart : dart.reversed();
        int i = index.at("m:" + fwd.token());
        mid_by_dart[dart] = {sx[i], sy[i]};
    }
    cl.mid = mid_by_dart;

    int verdict = check_embedding(p, nodes, cl.pos, cl.mid);
    if (verdict == 1) {
        for (auto& [node, v] : cl.pos) v.y = -v.y;
        for (auto& [dart, v] : cl.mid) v.y = -v.y;
        verdict = check_embedding(p, nodes, cl.pos, cl.mid);
    }
    if (verdict != 0) return std::nullopt;
    return cl;
}

} // namespace

LayoutResult layout(const Drawing& d) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok) throw invalid_drawing_error("invalid drawing: " + rep.violations.front());

    Planarization p = planarize(d);
    FaceSet fs = trace_faces_unchecked(p);
    std::vector<ComponentEuler> comps = component_euler(p, fs);
    std::sort(comps.begin(), comps.end(), [](const ComponentEuler& a, const ComponentEuler& b) {
        return a.nodes.front() < b.nodes.front();
    });

    LayoutResult res;
    IdMap<std::vector<Vec2>> edge_mids; // bend points per edge arc, by arc index
    std::map<PDart, Vec2> all_mids;
    double x_offset = 0.0;
    for (const ComponentEuler& comp : comps) {
        std::set<PNode> in_comp(comp.nodes.begin(), comp.nodes.end());
        std::map<PNode, Vec2> placed;
        std::map<PDart, Vec2> mids;

        if (comp.nodes.size() == 1) {
            placed[comp.nodes.front()] = {0.5, 0.5};
        } else if (comp.arcs == 1) {
            placed[comp.nodes[0]] = {0.2, 0.5};
            placed[comp.nodes[1]] = {0.8, 0.5};
            for (const auto& [dart, src] : p.dart_source)
                if (in_comp.count(src)) mids[dart] = {0.5, 0.5};
        } else {
            std::vector<int> face_ids;
            for (size_t f = 0; f < fs.faces.size(); ++f)
                if (in_comp.count(p.source(fs.faces[f].walk.front())))
                    face_ids.push_back(static_cast<int>(f));
            std::vector<int> candidates = face_ids;
            std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
                if (fs.faces[a].walk.size() != fs.faces[b].walk.size())
                    return fs.faces[a].walk.size() > fs.faces[b].walk.size();
                return id_less(fs.faces[a].key, fs.faces[b].key);
            });
            std::optional<ComponentLayout> cl;
            for (int outer : candidates) {
                cl = layout_component(p, fs, comp.nodes, face_ids, outer);
                if (cl) break;
            }
            if (!cl)
                throw layout_error("degenerate layout for every outer face of the component at " +
                                   comp.nodes.front().token());
            placed = std::move(cl->pos);
            mids = std::move(cl->mid);
        }

        double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
        for (const auto& [node, v] : placed) {
            minx = std::min(minx, v.x);
            maxx = std::max(maxx, v.x);
            miny = std::min(miny, v.y);
            maxy = std::max(maxy, v.y);
        }
        for (const auto& [dart, v] : mids) {
            minx = std::min(minx, v.x);
            maxx = std::max(maxx, v.x);
            miny = std::min(miny, v.y);
            maxy = std::max(maxy, v.y);
        }
        double scale = 1.0 / std::max({maxx - minx, maxy - miny, 1e-12});
        for (auto& [node, v] : placed) v = {(v.x - minx) * scale + x_offset, (v.y - miny) * scale};
        for (auto& [dart, v] : mids) v = {(v.x - minx) * scale + x_offset, (v.y - miny) * scale};
        x_offset += 1.25;

        for (const auto& [node, v] : placed) {
            if (node.is_vertex)
                res.vertex_pos[node.id] = v;
            else
                res.crossing_pos[node.id] = v;
        }
        for (const auto& [dart, v] : mids) all_mids[dart] = v;
    }

    // final rescale into the unit square
    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
    auto stretch = [&](const Vec2& v) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    };
    for (const auto& [id, v] : res.vertex_pos) stretch(v);
    for (const auto& [id, v] : res.crossing_pos) stretch(v);
    for (const auto& [dart, v] : all_mids) stretch(v);
    double scale = 1.0 / std::max({maxx - minx, maxy - miny, 1e-12});
    auto fix = [&](Vec2 v) { return Vec2{(v.x - minx) * scale, (v.y - miny) * scale}; };
    for (auto& [id, v] : res.vertex_pos) v = fix(v);
    for (auto& [id, v] : res.crossing_pos) v = fix(v);
    for (auto& [dart, v] : all_mids) v = fix(v);

    // polylines: vertices and crossings with the arc midpoints as bends
    for (const auto& [eid, e] : d.graph.edges) {
        const auto& s = d.edge_seq(eid);
        Polyline poly;
        poly.push_back(res.vertex_pos.at(e.tail));
        for (int arc = 0; arc <= static_cast<int>(s.size()); ++arc) {
            auto it = all_mids.find({eid, arc, +1});
            if (it != all_mids.end()) poly.push_back(it->second);
            if (arc < static_cast<int>(s.size())) poly.push_back(res.crossing_pos.at(s[arc]));
        }
        poly.push_back(res.vertex_pos.at(e.head));
        res.polylines[eid] = std::move(poly);
    }
    return res;
}

} // namespace fanplan

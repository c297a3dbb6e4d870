#include "fanplan/fuzz.hpp"

#include "fanplan/canonical.hpp"

#include <algorithm>

#include "fanplan/errors.hpp"
#include "fanplan/faces.hpp"
#include "fanplan/geometry.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

void apply_renames_public(Drawing& d, const std::vector<std::pair<Id, Id>>& renames) {
    for (size_t i = 0; i < renames.size(); ++i)
        rename_crossing(d, renames[i].first, "chain.tmp." + std::to_string(i));
    for (size_t i = 0; i < renames.size(); ++i)
        rename_crossing(d, "chain.tmp." + std::to_string(i), renames[i].second);
}

Id fresh_crossing(const Drawing& d, int& counter) {
    while (true) {
        Id c = "x" + std::to_string(++counter);
        if (!d.crossings.count(c)) return c;
    }
}

Dart dart_of(const Drawing& d, const PDart& pd) {
    // a planarization dart leaving a vertex is one of the edge-end darts
    if (pd.dir > 0 && pd.arc == 0) return {pd.edge, true};
    if (pd.dir < 0 && pd.arc == static_cast<int>(d.edge_seq(pd.edge).size()))
        return {pd.edge, false};
    throw internal_contradiction("dart " + pd.token() + " does not leave a vertex");
}

void split_face(Drawing& d, Rng& rng, int& vcounter, int& ecounter) {
    Planarization p = planarize(d);
    FaceSet faces = trace_faces_unchecked(p);
    const Face& face = faces.faces[rng.below(faces.faces.size())];

    // corners of the walk; in a crossing-free drawing all corner nodes are
    // vertices
    struct Corner {
        size_t idx; // position in the walk (departure dart)
        Id vertex;
    };
    std::vector<Corner> corners;
    for (size_t i = 0; i < face.walk.size(); ++i)
        corners.push_back({i, p.source(face.walk[i]).id});

    int want = 1 + static_cast<int>(rng.below(4)); // 1,2 or 3, favoring 3
    if (want > 3) want = 3;
    std::vector<Corner> pool = corners;
    rng.shuffle(pool);
    std::vector<Corner> picked;
    IdSet used;
    for (const Corner& c : pool) {
        if (static_cast<int>(picked.size()) == want) break;
        if (used.insert(c.vertex).second) picked.push_back(c);
    }
    std::sort(picked.begin(), picked.end(), [](const Corner& a, const Corner& b) {
        return a.idx < b.idx;
    });

    Id w = "v" + std::to_string(++vcounter);
    d.graph.vertices[w] = "";
    d.rot[w] = {};
    for (const Corner& c : picked) {
        Id eid = "e" + std::to_string(++ecounter);
        bool w_is_tail = rng.below(2) == 0;
        d.graph.edges[eid] = {eid, w_is_tail ? w : c.vertex, w_is_tail ? c.vertex : w};
        d.seq[eid] = {};
        // seen from w the corners pass by in reverse walk order
        d.rot[w].insert(d.rot[w].begin(), Dart{eid, w_is_tail});
        // the face's corner wedge at c.vertex sweeps ccw from the reverse of
        // the arriving walk dart to the departing one
        size_t m = face.walk.size();
        PDart arriving = face.walk[(c.idx + m - 1) % m];
        Dart anchor = dart_of(d, arriving.reversed());
        auto& rot = d.rot[c.vertex];
        auto it = std::find(rot.begin(), rot.end(), anchor);
        if (it == rot.end()) throw internal_contradiction("corner dart missing at " + c.vertex);
        rot.insert(std::next(it), Dart{eid, !w_is_tail});
    }
    canonicalize_rotations(d);
}

Drawing triangle() {
    PolySpec s;
    s.vertices = {{"v1", {0, 0}}, {"v2", {1, 0}}, {"v3", {0.5, 0.866}}};
    s.edges = {{"e1", {"v1", "v2", {}}}, {"e2", {"v2", "v3", {}}}, {"e3", {"v1", "v3", {}}}};
    return from_polylines(s);
}

// g currently leaves A immediately on one side of b's dart; the hook moves
// it to the other side and crosses b's first arc once, close to A.
std::optional<Drawing> apply_hook(const Drawing& d, const Id& A, const Id& b, const Id& g,
                                  Side g_side_of_b) {
    Drawing nd = d;
    const Edge& be = d.edge(b);
    const Edge& ge = d.edge(g);
    bool b_at_tail = A == be.tail;
    bool g_at_tail = A == ge.tail;

    auto& rot = nd.rot[A];
    Dart gd{g, g_at_tail};
    Dart bd{b, b_at_tail};
    rot.erase(std::find(rot.begin(), rot.end(), gd));
    auto it = std::find(rot.begin(), rot.end(), bd);
    Side new_side = opposite(g_side_of_b);
    bool insert_after = b_at_tail ? new_side == Side::left : new_side == Side::right;
    rot.insert(insert_after ? std::next(it) : it, gd);

    int counter = 0;
    Id cid = fresh_crossing(nd, counter);
    // travelling away from A the hook passes from the new side back to the
    // old one
    Sign away = g_side_of_b == Side::right ? +1 : -1; // from left to right iff old side is right
    Sign g_over_b = g_at_tail ? away : -away;
    Id lo = std::min(b, g, ShortLex{});
    Id hi = std::max(b, g, ShortLex{});
    nd.crossings[cid] = {cid, lo, hi, lo == b ? g_over_b : -g_over_b};

    auto& sb = nd.seq[b];
    b_at_tail ? (void)sb.insert(sb.begin(), cid) : sb.push_back(cid);
    auto& sg = nd.seq[g];
    g_at_tail ? (void)sg.insert(sg.begin(), cid) : sg.push_back(cid);

    canonicalize_rotations(nd);
    ValidationReport rep = validate_drawing(nd);
    if (!rep.ok)
        throw internal_contradiction("adjacent hook produced invalid drawing: " +
                                     rep.violations.front());
    if (!check_fan_planar(nd).ok()) return std::nullopt;
    return nd;
}

// Deepen crossing c0 into an adjacent pair with the same sign: the new
// crossing sits next to c0 on both edges, on the same side of each. The
// multi-crossing step removes exactly such pairs, so this is its inverse.
std::optional<Drawing> apply_spiral(const Drawing& d, const Id& c0, bool after) {
    const Crossing& c = d.crossing(c0);
    Drawing nd = d;
    int counter = 0;
    Id cid = fresh_crossing(nd, counter);
    nd.crossings[cid] = {cid, c.first, c.second, c.sign};
    for (const Id& edge : {c.first, c.second}) {
        auto& s = nd.seq[edge];
        auto it = std::find(s.begin(), s.end(), c0);
        s.insert(after ? std::next(it) : it, cid);
    }
    if (!validate_drawing(nd).ok) return std::nullopt;
    if (!check_fan_planar(nd).ok()) return std::nullopt;
    return nd;
}

} // namespace

Drawing random_planar_seed(Rng& rng, int n) {
    if (n < 3) throw lookup_error("planar seed needs n >= 3");
    Drawing d = triangle();
    int vcounter = 3, ecounter = 3;
    while (static_cast<int>(d.graph.vertices.size()) < n) split_face(d, rng, vcounter, ecounter);
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok)
        throw internal_contradiction("planar seed invalid: " + rep.violations.front());
    return d;
}

std::optional<Drawing> desimplify(const Drawing& d, const FanCertificate& cert, MoveKind kind,
                                  Rng& rng) {
    (void)cert;
    if (kind == MoveKind::adjacent_hook) {
        struct Site {
            Id A, b, g;
            Side side;
        };
        std::vector<Site> sites;
        for (const auto& [v, darts] : d.rot) {
            size_t m = darts.size();
            if (m < 2) continue;
            for (size_t i = 0; i < m; ++i) {
                const Dart& bd = darts[i];
                const Dart& gd = darts[(i + 1) % m];
                if (bd.edge == gd.edge) continue;
                // gd sits ccw-after bd: left side at b's tail, right at its head
                Side side = bd.at_tail ? Side::left : Side::right;
                sites.push_back({v, bd.edge, gd.edge, side});
                sites.push_back({v, gd.edge, bd.edge,
                                 gd.at_tail ? Side::right : Side::left});
            }
        }
        rng.shuffle(sites);
        for (const Site& s : sites)
            if (auto nd = apply_hook(d, s.A, s.b, s.g, s.side)) return nd;
        return std::nullopt;
    }

    // crossing spiral
    std::vector<Id> sites;
    for (const auto& [cid, c] : d.crossings) {
        (void)c;
        sites.push_back(cid);
    }
    rng.shuffle(sites);
    for (const Id& cid : sites) {
        bool first = rng.below(2) == 0;
        for (bool after : {first, !first})
            if (auto nd = apply_spiral(d, cid, after)) return nd;
    }
    return std::nullopt;
}

Drawing spiral_chain_instance(int k) {
    if (k < 2 || k % 2 != 0) throw lookup_error("chain length must be even and >= 2");
    PolySpec s;
    s.vertices = {{"R", {0, 0}}, {"B", {10, 0}}, {"G", {4.8, 2}}};
    s.edges["g"] = {"R", "B", {}};
    s.edges["b"] = {"G", "R", {{5, -2}, {1, -2}}};

    std::vector<double> depth(k + 1), dive_x(k + 1), rise_x(k + 1);
    for (int i = 0; i <= k; ++i) depth[i] = 3.0 + 1.6 * i;
    dive_x[1] = 0.4; // black dive targets shrink toward R level by level
    for (int j = 3; j <= k; j += 2) dive_x[j] = dive_x[j - 2] * 0.75;
    for (int j = 1; j <= k; j += 2) rise_x[j] = 7.0 + 0.2 * (j - 1);

    // black dive of b_j at height y (the segment R -> (dive_x, -depth))
    auto black_dive_at = [&](int j, double y) { return dive_x[j] * (-y) / depth[j]; };

    // r0: wraps under b, rises through b's shelf
    s.vertices["W0"] = {3.9, -1.8};
    s.edges["r0"] = {"B", "W0", {{9, -depth[0]}, {4.2, -depth[0]}}};

    for (int j = 1; j < k; j += 2) { // blacks
        Id w = "W" + std::to_string(j);
        s.vertices[w] = {rise_x[j], -depth[j - 1] + 0.3};
        s.edges["b" + std::to_string(j)] = {"R", w,
                                            {{dive_x[j], -depth[j]}, {rise_x[j], -depth[j]}}};
    }
    for (int i = 2; i < k; i += 2) { // interior reds
        Id w = "W" + std::to_string(i);
        double rx = dive_x[i + 1];
        double cross_prev = black_dive_at(i - 1, -1.0) * 0; // unused, kept for clarity
        (void)cross_prev;
        double y_in = -0.75 * depth[i - 1]; // crossing height with b_{i-1}'s dive
        double y_out = i == 2 ? -2.0 * rx   // b's own dive has slope 2
                              : -0.5625 * depth[i - 3];
        s.vertices[w] = {rx, (y_in + y_out) / 2};
        s.edges["r" + std::to_string(i)] = {"B", w, {{9.2, -depth[i]}, {rx, -depth[i]}}};
    }
    { // terminal red over the top
        Id w = "W" + std::to_string(k);
        double x_stop_in = dive_x[k - 1] / depth[k - 1];
        double x_stop_out = k == 2 ? 0.5 : dive_x[k - 3] / depth[k - 3];
        s.vertices[w] = {(x_stop_in + x_stop_out) / 2, -1};
        s.edges["r" + std::to_string(k)] = {"B", w, {{9, 1}, {-1, 1}, {-1, -1}}};
    }

    Drawing d = from_polylines(s);
    // stable crossing names
    std::vector<std::pair<Id, Id>> renames;
    renames.push_back({crossing_between(d, "g", "b", 1), "x"});
    renames.push_back({crossing_between(d, "r0", "b", 1), "x0"});
    auto chain_name = [&](int i) {
        return (i % 2 == 0 ? "r" : "b") + std::to_string(i);
    };
    for (int i = 1; i <= k; ++i)
        renames.push_back(
            {crossing_between(d, chain_name(i - 1), chain_name(i), 1), "x" + std::to_string(i)});
    renames.push_back({crossing_between(d, chain_name(k), "b", 1), "y"});
    apply_renames_public(d, renames);
    return d;
}

Drawing fuzz(const FuzzParams& p) {
    if (p.n < 3) throw lookup_error("fuzz needs n >= 3");
    Rng rng(p.seed);
    int nv = 3 + static_cast<int>(p.n > 3 ? rng.below(static_cast<uint64_t>(p.n) - 2) : 0);
    Drawing d = random_planar_seed(rng, nv);
    FanCertificate cert = *check_fan_planar(d).cert;
    for (int i = 0; i < p.moves; ++i) {
        int total = p.weight_hook + p.weight_spiral;
        MoveKind kind = static_cast<int>(rng.below(total)) < p.weight_hook
                            ? MoveKind::adjacent_hook
                            : MoveKind::crossing_spiral;
        auto nd = desimplify(d, cert, kind, rng);
        if (!nd)
            nd = desimplify(d, cert,
                            kind == MoveKind::adjacent_hook ? MoveKind::crossing_spiral
                                                            : MoveKind::adjacent_hook,
                            rng);
        if (!nd) continue;
        d = std::move(*nd);
        cert = *check_fan_planar(d).cert;
    }
    FanOutcome check = check_fan_planar(d);
    if (!check.ok()) throw internal_contradiction("fuzz produced a non-fan-planar drawing");
    return d;
}

} // namespace fanplan

#include "fanplan/faces.hpp"

#include <algorithm>

#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

PDart Planarization::ccw_next(const PDart& d) const {
    const PNode n = source(d);
    const auto& rot = node_rot.at(n);
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == d) return rot[(i + 1) % rot.size()];
    throw lookup_error("dart " + d.token() + " missing from rotation at " + n.token());
}

Planarization planarize(const Drawing& d) {
    Planarization p;

    for (const auto& [v, label] : d.graph.vertices) {
        (void)label;
        p.nodes.push_back({true, v});
        p.node_rot[{true, v}] = {};
    }
    for (const auto& [cid, c] : d.crossings) {
        (void)c;
        p.nodes.push_back({false, cid});
        p.node_rot[{false, cid}] = {};
    }

    // Arc endpoints
    for (const auto& [eid, e] : d.graph.edges) {
        const auto& s = d.edge_seq(eid);
        int k = static_cast<int>(s.size());
        p.arc_count += k + 1;
        for (int arc = 0; arc <= k; ++arc) {
            PNode from = arc == 0 ? PNode{true, e.tail} : PNode{false, s[arc - 1]};
            PNode to = arc == k ? PNode{true, e.head} : PNode{false, s[arc]};
            p.dart_source[{eid, arc, +1}] = from;
            p.dart_source[{eid, arc, -1}] = to;
        }
    }

    // Vertex rotations come straight from rot.
    for (const auto& [v, darts] : d.rot) {
        auto& out = p.node_rot[{true, v}];
        for (const Dart& dart : darts) {
            int k = static_cast<int>(d.edge_seq(dart.edge).size());
            out.push_back(dart.at_tail ? PDart{dart.edge, 0, +1} : PDart{dart.edge, k, -1});
        }
    }

    // Crossing rotations are derived from the sign. With the first edge
    // heading east and sign +1 (second crosses left to right, i.e. heads
    // south), the ccw order of outgoing darts is east, north, west, south:
    // a-forward, b-backward, a-backward, b-forward.
    for (const auto& [cid, c] : d.crossings) {
        int pa = d.position(c.first, cid);
        int pb = d.position(c.second, cid);
        PDart a_fwd{c.first, pa, +1}, a_bwd{c.first, pa - 1, -1};
        PDart b_fwd{c.second, pb, +1}, b_bwd{c.second, pb - 1, -1};
        auto& out = p.node_rot[{false, cid}];
        if (c.sign > 0)
            out = {a_fwd, b_bwd, a_bwd, b_fwd};
        else
            out = {a_fwd, b_fwd, a_bwd, b_bwd};
    }

    return p;
}

FaceSet trace_faces_unchecked(const Planarization& p) {
    FaceSet fs;
    for (const auto& [d0, src] : p.dart_source) {
        (void)src;
        if (fs.face_of.count(d0)) continue;
        Face f;
        PDart d = d0;
        do {
            fs.face_of[d] = static_cast<int>(fs.faces.size());
            f.walk.push_back(d);
            d = p.ccw_next(d.reversed());
        } while (!(d == d0));
        f.key = f.walk.front().token();
        for (const PDart& w : f.walk)
            if (id_less(w.token(), f.key)) f.key = w.token();
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

std::vector<ComponentEuler> component_euler(const Planarization& p, const FaceSet& f) {
    // union-find over nodes
    std::map<PNode, PNode> parent;
    for (const PNode& n : p.nodes) parent[n] = n;
    std::function<PNode(PNode)> find = [&](PNode n) {
        while (!(parent[n] == n)) {
            parent[n] = parent[parent[n]];
            n = parent[n];
        }
        return n;
    };
    auto unite = [&](const PNode& a, const PNode& b) { parent[find(a)] = find(b); };

    for (const auto& [d, src] : p.dart_source)
        if (d.dir > 0) unite(src, p.target(d));

    std::map<PNode, int> comp_index;
    std::vector<ComponentEuler> comps;
    for (const PNode& n : p.nodes) {
        PNode r = find(n);
        if (!comp_index.count(r)) {
            comp_index[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_index[r]].nodes.push_back(n);
    }
    for (const auto& [d, src] : p.dart_source)
        if (d.dir > 0) comps[comp_index[find(src)]].arcs++;
    for (const Face& face : f.faces)
        comps[comp_index[find(p.source(face.walk.front()))]].faces++;
    // An isolated node has the whole sphere around it.
    for (auto& c : comps)
        if (c.arcs == 0) c.faces = 1;
    return comps;
}

FaceSet trace_faces(const Drawing& d) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok) throw invalid_drawing_error("invalid drawing: " + rep.violations.front());
    return trace_faces_unchecked(planarize(d));
}

} // namespace fanplan

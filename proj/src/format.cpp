#include "fanplan/format.hpp"

#include <fstream>
#include <sstream>

#include "fanplan/errors.hpp"
#include "fanplan/validate.hpp"

namespace fanplan {

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'))
            return false;
    return true;
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace

std::string serialize(const Drawing& d) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok) throw invalid_drawing_error("cannot serialize invalid drawing: " + rep.violations.front());

    std::ostringstream os;
    os << "fpd 1\n";
    for (const auto& [v, label] : d.graph.vertices) {
        os << "v " << v;
        if (!label.empty()) os << " " << label;
        os << "\n";
    }
    for (const auto& [eid, e] : d.graph.edges) os << "e " << eid << " " << e.tail << " " << e.head << "\n";
    for (const auto& [cid, c] : d.crossings)
        os << "x " << cid << " " << c.first << " " << d.position(c.first, cid) << " " << c.second
           << " " << d.position(c.second, cid) << " " << (c.sign > 0 ? "+" : "-") << "\n";
    for (const auto& [v, darts] : d.rot) {
        if (darts.empty()) continue;
        // canonical start: smallest dart token first
        size_t best = 0;
        for (size_t i = 1; i < darts.size(); ++i)
            if (id_less(darts[i].token(), darts[best].token())) best = i;
        os << "rot " << v << ":";
        for (size_t i = 0; i < darts.size(); ++i)
            os << " " << darts[(best + i) % darts.size()].token();
        os << "\n";
    }
    return os.str();
}

Drawing parse(const std::string& text) {
    Drawing d;
    struct Placement {
        Id edge;
        int pos;
        int line;
    };
    std::map<Id, std::pair<Placement, Placement>, ShortLex> placements;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false;

    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> t = tokens(line);
        if (t.empty()) continue;
        if (!header) {
            if (t.size() != 2 || t[0] != "fpd" || t[1] != "1")
                throw parse_error(lineno, "expected header 'fpd 1'");
            header = true;
            continue;
        }
        if (t[0] == "v") {
            if (t.size() < 2) throw parse_error(lineno, "v needs an identifier");
            if (!valid_id(t[1])) throw parse_error(lineno, "bad identifier '" + t[1] + "'");
            if (d.graph.vertices.count(t[1]))
                throw invalid_drawing_error("duplicate vertex " + t[1]);
            std::string label;
            for (size_t i = 2; i < t.size(); ++i) label += (i > 2 ? " " : "") + t[i];
            d.graph.vertices[t[1]] = label;
        } else if (t[0] == "e") {
            if (t.size() != 4) throw parse_error(lineno, "e needs: id tail head");
            for (int i = 1; i <= 3; ++i)
                if (!valid_id(t[i])) throw parse_error(lineno, "bad identifier '" + t[i] + "'");
            if (d.graph.edges.count(t[1])) throw invalid_drawing_error("duplicate edge " + t[1]);
            if (!d.graph.vertices.count(t[2]) || !d.graph.vertices.count(t[3]))
                throw invalid_drawing_error("edge " + t[1] + " references unknown vertex");
            d.graph.edges[t[1]] = {t[1], t[2], t[3]};
        } else if (t[0] == "x") {
            if (t.size() != 7) throw parse_error(lineno, "x needs: id edge pos edge pos sign");
            if (!valid_id(t[1])) throw parse_error(lineno, "bad identifier '" + t[1] + "'");
            if (d.crossings.count(t[1])) throw invalid_drawing_error("duplicate crossing " + t[1]);
            Sign sign;
            if (t[6] == "+")
                sign = +1;
            else if (t[6] == "-")
                sign = -1;
            else
                throw parse_error(lineno, "sign must be + or -");
            int p1, p2;
            try {
                p1 = std::stoi(t[3]);
                p2 = std::stoi(t[5]);
            } catch (...) {
                throw parse_error(lineno, "positions must be integers");
            }
            if (p1 < 1 || p2 < 1) throw parse_error(lineno, "positions are 1-based");
            if (!d.graph.edges.count(t[2]) || !d.graph.edges.count(t[4]))
                throw invalid_drawing_error("crossing " + t[1] + " references unknown edge");
            Id first = t[2], second = t[4];
            if (!id_less(first, second)) {
                std::swap(first, second);
                std::swap(p1, p2);
                sign = -sign; // exchanging the roles mirrors the reading
            }
            d.crossings[t[1]] = {t[1], first, second, sign};
            placements[t[1]] = {{first, p1, lineno}, {second, p2, lineno}};
        } else if (t[0] == "rot") {
            if (t.size() < 2 || t[1].empty() || t[1].back() != ':')
                throw parse_error(lineno, "rot needs: vertex: darts...");
            Id v = t[1].substr(0, t[1].size() - 1);
            if (!d.graph.vertices.count(v)) throw invalid_drawing_error("rotation for unknown vertex " + v);
            if (d.rot.count(v)) throw invalid_drawing_error("duplicate rotation for " + v);
            std::vector<Dart>& darts = d.rot[v];
            for (size_t i = 2; i < t.size(); ++i) {
                char end = t[i].back();
                if (end != '+' && end != '-') throw parse_error(lineno, "dart must end in + or -");
                Id e = t[i].substr(0, t[i].size() - 1);
                if (!valid_id(e)) throw parse_error(lineno, "bad identifier '" + e + "'");
                darts.push_back({e, end == '+'});
            }
        } else {
            throw parse_error(lineno, "unknown directive '" + t[0] + "'");
        }
    }
    if (!header) throw parse_error(lineno, "missing header 'fpd 1'");

    // sequences from declared positions; they must be exactly 1..k per edge
    IdMap<std::vector<std::pair<int, Id>>> by_edge;
    for (const auto& [cid, pl] : placements) {
        by_edge[pl.first.edge].push_back({pl.first.pos, cid});
        by_edge[pl.second.edge].push_back({pl.second.pos, cid});
    }
    for (const auto& [eid, e] : d.graph.edges) {
        (void)e;
        auto& entries = by_edge[eid];
        std::sort(entries.begin(), entries.end());
        std::vector<Id>& s = d.seq[eid];
        for (size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].first != static_cast<int>(i) + 1)
                throw invalid_drawing_error("positions on edge " + eid + " are not contiguous from 1");
            s.push_back(entries[i].second);
        }
    }
    for (const auto& [v, label] : d.graph.vertices) {
        (void)label;
        if (!d.rot.count(v)) d.rot[v] = {};
    }

    canonicalize_rotations(d);
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok) throw invalid_drawing_error("semantic error: " + rep.violations.front());
    return d;
}

Drawing read_drawing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str());
}

void write_drawing_file(const std::string& path, const Drawing& d) {
    std::string text = serialize(d);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw error("cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw error("cannot move " + tmp + " to " + path);
}

} // namespace fanplan

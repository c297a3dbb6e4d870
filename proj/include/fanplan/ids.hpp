#pragma once

#include <map>
#include <set>
#include <string>

namespace fanplan {

// Vertex, edge and crossing identifiers. Compared in shortlex order so that
// numeric suffixes sort naturally (v2 < v10) and every tie-break in the
// library is total and reproducible.
using Id = std::string;

struct ShortLex {
    bool operator()(const Id& a, const Id& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

template <class V>
using IdMap = std::map<Id, V, ShortLex>;
using IdSet = std::set<Id, ShortLex>;

inline bool id_less(const Id& a, const Id& b) { return ShortLex{}(a, b); }

// Side of an oriented curve, always relative to the reference orientation of
// the edge in question.
enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// Crossing sign: +1 means the second edge crosses the first from left to
// right, -1 from right to left, both edges taken in reference orientation on
// a counterclockwise-oriented sphere.
using Sign = int;

} // namespace fanplan

#pragma once

#include <cstdint>
#include <optional>

#include "fanplan/drawing.hpp"
#include "fanplan/fan.hpp"

namespace fanplan {

// Deterministic splitmix64 stream; all fuzzing randomness comes from here so
// runs are reproducible across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
};

enum class MoveKind {
    adjacent_hook,   // detour an edge across an adjacent edge (adds an S1 crossing)
    crossing_spiral, // wind an existing crossing into an adjacent same-sign
                     // pair, the inverse of one multi-crossing removal step
};

struct FuzzParams {
    uint64_t seed = 1;
    int n = 8;     // vertex budget (>= 3)
    int moves = 4; // de-simplification moves
    int weight_hook = 1;
    int weight_spiral = 1;
};

// Planar drawing grown by incremental face-splitting of a triangle.
Drawing random_planar_seed(Rng& rng, int n);

// One crossing-adding detour preserving fan-planarity; absent when no legal
// site exists under the current certificate.
std::optional<Drawing> desimplify(const Drawing& d, const FanCertificate& cert, MoveKind kind,
                                  Rng& rng);

// Seeded planar drawing followed by `moves` desimplify applications; the
// output is fan-planar by construction and re-verified.
Drawing fuzz(const FuzzParams& p);

// The conflict-chain construction consumed by the final rerouting step,
// generalized to any even chain length k >= 2: adjacent edges b, g crossing at x plus the
// alternating wrap r0, b1, ..., r_{k} whose last red crosses b between B
// and x_k. Edge ids are g, b, r0, b1, r2, ...; crossings x, x0..xk, y.
Drawing spiral_chain_instance(int k);

} // namespace fanplan

#pragma once

#include <string>
#include <vector>

#include "fanplan/drawing.hpp"

namespace fanplan {

// Deterministic instances transcribed from the figures' visible crossing
// patterns. Every instance passes validate_drawing and matches its
// documented qualitative properties (asserted by the test suite).
Drawing canonical(const std::string& name);

const std::vector<std::string>& canonical_names();

// i-th crossing between e1 and e2 counted along e1 from its tail (1-based).
Id crossing_between(const Drawing& d, const Id& e1, const Id& e2, int i);

void rename_crossing(Drawing& d, const Id& from, const Id& to);

} // namespace fanplan

#pragma once

#include <stdexcept>
#include <string>

namespace fanplan {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition required a valid drawing and the input is not one.
struct invalid_drawing_error : error {
    using error::error;
};

// Unknown name, edge not part of a crossing, vertex not an endpoint, ...
struct lookup_error : error {
    using error::error;
};

// A RouteSpec that does not describe a legal reroute of its target.
struct route_error : error {
    using error::error;
};

// A provably impossible branch was reached, or a rewrite produced an
// invalid drawing. Signals an engine bug or an invalid input; never masked.
struct internal_contradiction : error {
    using error::error;
};

struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& msg)
        : error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Layout stayed degenerate for every outer-face candidate.
struct layout_error : error {
    using error::error;
};

} // namespace fanplan

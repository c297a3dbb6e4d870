#pragma once

#include <string>

#include "fanplan/drawing.hpp"

namespace fanplan {

// Line-based text format:
//   fpd 1
//   v <id> [label]
//   e <id> <tail> <head>
//   x <id> <edge> <pos> <edge> <pos> <+|->
//   rot <vertex>: <dart> ...        dart = <edge>+ (vertex is tail) or <edge>-
//   # comment
// Serialization is canonical: sorted identifiers, fixed field order,
// rotations starting at their smallest dart. Byte-identical across runs and
// injective on valid drawings.
std::string serialize(const Drawing& d);

// Throws parse_error (syntax, with line number) or invalid_drawing_error
// (semantic, naming the violated invariant). parse(serialize(d)) == d.
Drawing parse(const std::string& text);

Drawing read_drawing_file(const std::string& path);
void write_drawing_file(const std::string& path, const Drawing& d);

} // namespace fanplan

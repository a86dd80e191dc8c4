#pragma once

#include <string>
#include <string_view>

#include "dibrush/digraph.hpp"
#include "dibrush/engine.hpp"

namespace dibrush {

/// Edge-list text: first data line "n m", then m lines "u v". Anything after
/// '#' on a line is a comment; blank lines are skipped. Throws ParseError
/// (with the 1-based line number) or IndexOutOfRange.
Digraph parse_edge_list(std::string_view text);

/// Canonical edge list, LF line endings, no comments.
std::string serialize_edge_list(const Digraph& g);

Digraph read_edge_list_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// Graphviz rendering. With a trace step, fired vertices are drawn white and
/// unfired ones filled black, clean arcs dashed and dirty arcs solid bold, and
/// each vertex label carries its brush count when non-zero.
std::string export_dot(const Digraph& g, const TraceStep* step = nullptr);

}  // namespace dibrush

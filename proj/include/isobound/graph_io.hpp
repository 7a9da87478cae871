#pragma once

#include <string>
#include <string_view>

#include "isobound/graph.hpp"

namespace isobound {

/// McKay graph6. Accepts an optional ">>graph6<<" header and trailing newline.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

/// DIMACS edge format: comment lines "c ...", one "p edge n m", then m lines
/// "e u v" with 1-indexed endpoints.
Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph &g);

/// Reads a file, choosing the format by extension (.g6 / .dimacs / .col).
Graph read_graph_file(const std::string &path);

} // namespace isobound

#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "reconf/graph.hpp"

namespace reconf {

/// Reads the DIMACS edge format: `c` comment lines, one `p edge <n> <m>`
/// line, then `e <u> <v>` lines with IDs in 1..n. Duplicate edges are
/// merged; the edge count in the header is not enforced. Errors carry the
/// line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

/// Writes `g` in the same format, numbering vertices by index from 1.
std::string emit_graph(const Graph& g);

}  // namespace reconf

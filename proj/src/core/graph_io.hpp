#pragma once

#include "core/graph.hpp"

#include <string>

namespace dominion {

// Edge-list text format:
//   n <vertex-count>
//   u v        (one 0-based edge per line; duplicates collapse, loops rejected)
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Standard graph6 ASCII encoding, restricted to n <= 128.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

} // namespace dominion

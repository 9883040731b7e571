#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace domlab {

// Text format: header "n m" followed by m lines "u v", 0 <= u < v < n.
// Vertices are 0-based. Canonical output sorts edges lexicographically,
// so write(read(t)) == t for canonical input.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_edge_list(const Graph& g, std::ostream& out);
std::string format_edge_list(const Graph& g);

}  // namespace domlab

#pragma once

#include <iosfwd>
#include <string>

#include "twcolor/graph.hpp"

namespace twc {

// Edge-list text format:
//   line 1:        "n m"
//   next m lines:  "u v"    (0-indexed, u < v)
// Lines starting with '#' and blank lines are skipped anywhere.
// The reader accepts unnormalized pairs (u > v) and rejects anything that
// build_graph would reject; the writer always emits u < v in sorted order.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace twc

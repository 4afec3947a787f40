#pragma once

#include <cstdint>
#include <functional>

#include "twcolor/graph.hpp"

namespace twc {

// Lexicographically smallest adjacency bitstring over all vertex
// relabelings, with bit j(j-1)/2 + i (i < j) set iff {i,j} is an edge and
// earlier bits more significant.  Equal for isomorphic graphs, distinct
// otherwise -- the value decodes back to a graph.  The search restricts
// itself to relabelings compatible with the degree-refinement partition,
// which is sound because any isomorphism preserves that partition.
// Throws TooLarge for n > 11 (the bitstring must fit 64 bits).
std::uint64_t canonical_form(const Graph& g);

// Graph encoded by a canonical_form-style bitstring.
Graph graph_from_bitstring(int n, std::uint64_t bits);

// Calls visit on exactly one representative of every isomorphism class of
// simple graphs on n vertices, in increasing edge count (ties in bitstring
// order); returns how many classes were visited.  Classes are produced by
// levelwise single-edge augmentation with exact canonical deduplication,
// so none is missed and none repeats.  Throws TooLarge for n > 9.
long long for_each_graph(int n, const std::function<void(const Graph&)>& visit);

} // namespace twc

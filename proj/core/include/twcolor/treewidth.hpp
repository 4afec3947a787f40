#pragma once

#include "twcolor/decomposition.hpp"
#include "twcolor/graph.hpp"

namespace twc {

struct TreewidthResult {
    int width = -1;
    TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over subsets of eliminated
// vertices, O(2^n poly(n)) time and 2^n bytes of memory.  Ties between
// optimal elimination orders are broken toward the lexicographically
// smallest order, so the witness decomposition is reproducible.
// Throws TooLarge when n exceeds the limit.
TreewidthResult treewidth_exact(const Graph& g, int limit = 20);

struct TreewidthBounds {
    int lower = 0;  // degeneracy
    int upper = 0;  // width of a min-degree greedy elimination
};

// Cheap bounds for graphs too large for the exact solver.
TreewidthBounds treewidth_bounds(const Graph& g);

} // namespace twc

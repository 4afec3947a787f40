#pragma once

#include <utility>
#include <vector>

#include "twcolor/errors.hpp"

namespace twc {

// Simple undirected graph on the dense vertex set 0..n-1.  Immutable after
// construction: every derived object (colorings, decompositions, reports)
// may hold indices into it without invalidation concerns.  Edges are stored
// normalized (u < v) and sorted, and neighbor lists are sorted, so all
// iteration orders are deterministic.
class Graph {
  public:
    Graph() : n_(0) {}

    // Validates, normalizes u>v, drops duplicate pairs.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // Sorted non-increasing.
    std::vector<int> degree_sequence() const;

    // Adjacency bitmask per vertex; only valid while vertex_count() <= 64.
    // Hot paths (treewidth DP, odd-set scan, coloring search) run on these.
    std::vector<std::uint64_t> adjacency_masks() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// K_k.  pre: k >= 1.
Graph complete_graph(int k);

// p-th power of the n-vertex path: ij is an edge iff 0 < |i-j| <= p.
// pre: n >= 1, p >= 1.
Graph path_power(int n, int p);

Graph complement(const Graph& g);

// Graph obtained from g by deleting one edge (by position in g.edges()).
Graph delete_edge(const Graph& g, int edge_index);

struct DegeneracyResult {
    int k = 0;
    // Peeling order: order[i] is removed i-th, always a vertex of minimum
    // degree in what remains (smallest id on ties).
    std::vector<int> order;
};

DegeneracyResult degeneracy(const Graph& g);

} // namespace twc

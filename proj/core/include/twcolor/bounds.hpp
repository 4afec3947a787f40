#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twcolor/graph.hpp"

namespace twc {

// The three edge-count bounds, identified by the names they carry in CLI
// reports.  All of them cap twice the edge count of a graph with parameter
// k (treewidth or degeneracy) and maximum degree delta:
//   treewidth:   2|E| <= delta*n - (delta-k)(delta-k+1)    (delta >= k)
//   rose:        2|E| <= 2kn - k(k+1)
//   degenerate:  2|E| <= delta*n - (delta-k)(delta-k+1)/2  (delta >= k)
enum class BoundModel { treewidth, rose, degenerate };

const char* bound_model_name(BoundModel m);

struct BoundReport {
    BoundModel model = BoundModel::treewidth;
    int n = 0;
    int delta = 0;
    int k = 0;
    long long rhs = 0;
    long long actual = 0;  // 2|E|
    bool satisfied = false;
    bool tight = false;    // actual == rhs
};

// Exact right-hand side of the chosen bound.  Throws HypothesisViolated
// when a model needing delta >= k is asked with delta < k, or on negative
// parameters.  (delta-k)(delta-k+1) is a product of consecutive integers,
// so the halved form stays integral.
long long edge_bound_rhs(int n, int delta, int k, BoundModel model);

BoundReport check_edge_bound(const Graph& g, int k, BoundModel model);

// n odd and 2|E| > Delta(G) * (n - 1).
bool is_overfull(const Graph& g);

// Smallest (by bitmask order) odd vertex set S, |S| >= 3, whose induced
// subgraph has maximum degree Delta(G) and is overfull; nullopt if none.
// Only sets containing a closed neighborhood of some maximum-degree vertex
// can qualify, which the scan exploits.  Throws TooLarge over the limit.
std::optional<std::vector<int>> find_overfull_subgraph(const Graph& g, int limit = 18);

// With delta = Delta(G): requires delta >= k and (delta-k)^2 >= k (the
// integer form of delta >= k + sqrt(k)), then reports whether g avoids
// being overfull -- callers certify treewidth <= k themselves.  Throws
// HypothesisViolated when the degree hypothesis fails.
bool verify_lemma4(const Graph& g, int k);

// Integer form of delta >= k + 1/2 + sqrt(2k + 1/4), the degree threshold
// under which a k-degenerate graph cannot be overfull: 2*delta - 2k - 1
// positive with square >= 8k + 1.
bool degenerate_degree_threshold(int delta, int k);

} // namespace twc

#pragma once

#include <optional>
#include <vector>

#include "twcolor/graph.hpp"
#include "twcolor/rational.hpp"

namespace twc {

struct FractionalIndex {
    Rational value;
    // Witness: an odd vertex set whose induced density attains the value,
    // or (when the maximum degree dominates) a maximum-degree vertex.
    std::optional<std::vector<int>> odd_set;
    int witness_vertex = -1;
};

// Fractional chromatic index by the matching-polytope characterization:
//   max( Delta(G), max over odd |S| >= 3 of 2|E(G[S])| / (|S|-1) )
// computed in exact rational arithmetic over all odd subsets.  The first
// odd set (in ascending bitmask order) attaining a value above Delta is
// returned as witness.  Throws TooLarge when n exceeds the limit.
FractionalIndex fractional_chi_prime(const Graph& g, int limit = 18);

// All nonempty matchings as sorted lists of edge indices, generated by
// recursive extension in lexicographic edge order.  Throws TooLarge when
// the graph has more than edge_limit edges.
std::vector<std::vector<int>> enumerate_matchings(const Graph& g, int edge_limit = 20);

// Independent cross-check of fractional_chi_prime: solve the fractional
// edge coloring LP  min 1'lambda  s.t.  sum of chosen matchings covers
// every edge exactly once, lambda >= 0, by revised simplex with Bland's
// rule over exact rationals.  The single-edge matchings give a feasible
// starting basis, so no phase-1 is needed.
Rational fractional_via_lp(const Graph& g, int edge_limit = 20);

} // namespace twc

#pragma once

#include <optional>
#include <vector>

#include "twcolor/decomposition.hpp"
#include "twcolor/graph.hpp"
#include "twcolor/rational.hpp"

namespace twc {

// Erdos-Gallai test: d (non-increasing, non-negative) is the degree
// sequence of some simple graph iff the sum is even and for every l,
//   sum_{i<=l} d_i <= l(l-1) + sum_{i>l} min(d_i, l).
// Throws NotSorted on unordered or negative input.
bool erdos_gallai_graphic(const std::vector<int>& d);

// Why a sequence fails the test: 0 for an odd degree sum, otherwise the
// smallest violated l; nullopt when the sequence is graphic.
std::optional<int> erdos_gallai_failure(const std::vector<int>& d);

// Deterministic Havel-Hakimi realization: vertex i receives degree d[i];
// the largest remaining demand connects to the next-largest ones, smallest
// vertex id first on ties.  Throws NotGraphic when the sequence fails.
Graph havel_hakimi_realize(const std::vector<int>& d);

// Whether the sequence (c repeated r+1 times, c-1, c-2, ..., 1) on c+r
// vertices is graphic, decided arithmetically: 4 | c(2r+c+1) and r^2 >= c.
// When true, the explicit sequence is cross-checked against the
// Erdos-Gallai test.  pre: c >= 1, r >= 1.
bool lemma7_check(int c, int r);

// Smallest k in k0..k0+8 with k = floor(sqrt(k)) (mod 8) and k not a
// perfect square; such k make (k - floor(sqrt(k)))/2 divisible by 4,
// which lemma7_check needs for the tight construction's patch sequence.
// Throws BadParams when the window holds no such k.
int select_k(int k0);

// K_k plus r independent vertices adjacent to all of the clique.
// Treewidth k, maximum degree k-1+r (r >= 1), and twice the edge count
// meets the treewidth edge bound with equality.
Graph construct_apex(int k, int r);

// Complement of the disjoint star forest K_{1,1} + K_{1,2} + ... + K_{1,p}
// (p centers, p(p+1)/2 leaves): an (n-1-p)-degenerate graph attaining the
// degenerate edge bound with equality.
Graph construct_stars_complement(int p);

// Parameters of the tight treewidth-k construction.
// Invariants: delta even, c = k - delta/2 >= 0, r = delta - k >= 0,
// 4 | c(2r+c+1), r^2 >= c, n >= 4k.
struct TightParams {
    int k = 0;
    int delta = 0;
    int c = 0;
    int r = 0;
    int n = 0;
};

// Validated parameter builders: explicit (k, delta, n), or derived from a
// lower bound k0 via select_k with delta = k + floor(sqrt(k)).
TightParams tight_params(int k, int delta, int n);
TightParams tight_params_from_k0(int k0, int n);

struct TightConstruction {
    TightParams params;
    Graph graph;
    // Width-k witness: the path-of-cliques decomposition of the k-th power
    // of a path, which contains the constructed graph.
    TreeDecomposition decomposition;
};

// The extremal graph for the treewidth edge bound: the (delta/2)-th power
// of an n-vertex path, augmented near both ends to raise low degrees to
// the target profile (k, k+1, ..., delta, ..., delta, ..., k+1, k), with
// the overshoot removed by deleting an embedded realization of the patch
// sequence from lemma7_check.  2|E| = delta*n - (delta-k)(delta-k+1).
TightConstruction construct_tight(const TightParams& params);

// Partial k-tree generator: grow a random k-tree (each new vertex joins a
// uniformly chosen k-clique), then keep each edge independently with
// probability keep.  Same seed, same graph -- the stream is SplitMix64
// and consumes one draw per added vertex, then one per k-tree edge in
// sorted edge order.  Treewidth is at most k by construction.
Graph random_partial_ktree(int n, int k, const Rational& keep, std::uint64_t seed);

} // namespace twc

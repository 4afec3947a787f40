#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twcolor/graph.hpp"

namespace twc {

// Positive part [x]^+ = max(x, 0).  Shared by the tree-sum lemma
// evaluators and the degree-accounting tests so the clamping convention
// lives in exactly one place.
inline long long positive_part(long long x) { return x > 0 ? x : 0; }

// Tree decomposition of a graph: a tree whose nodes carry vertex bags.
// Node ids are arbitrary non-negative integers (smoothing and subdivision
// mint fresh ones); bags are kept sorted.
struct TreeDecomposition {
    std::vector<int> nodes;                     // sorted, unique
    std::vector<std::pair<int, int>> tree_edges;
    std::map<int, std::vector<int>> bags;       // node id -> sorted bag
};

struct ValidationReport {
    bool valid = false;
    int width = -1;       // max bag size - 1, only meaningful when valid
    bool smooth = false;  // all bags of size width+1, adjacent bags share width vertices
    std::string reason;   // first failed condition, empty when valid
};

// Checks, in order: structural sanity (bags match nodes, edges join known
// nodes, T is a tree), vertex coverage, edge coverage, and connectivity of
// every vertex's bag set.  Smoothness is evaluated only for valid inputs.
// A bag mentioning a vertex outside g throws BagVertexOutOfRange -- that is
// a decomposition for some other graph, not an invalid one for this graph;
// every other defect lands in the report.
ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Rebuilds td into a smooth decomposition of the same width k:
// every bag has exactly k+1 vertices, adjacent bags share exactly k, and
// the tree ends up with exactly n-k nodes.  Throws InvalidInput if td does
// not validate.
TreeDecomposition smooth(const Graph& g, const TreeDecomposition& td);

// Tree with a distinguished root, over arbitrary node ids.  parent has an
// entry for every node except the root.
struct RootedTree {
    std::vector<int> nodes;     // sorted, unique
    int root = -1;
    std::map<int, int> parent;
};

// The subtree of decomposition nodes whose bags contain v, rooted at its
// smallest node id.  Throws UnknownVertex if v appears in no bag and
// InvalidInput if the occurrences are not connected in the tree.
RootedTree subtree_of_vertex(const TreeDecomposition& td, int v);

// For a tree edge (s,t) of a smooth decomposition, the unique vertex of
// B_s \ B_t.  Throws NotTreeEdge / NotSmooth.
int leaving_vertex(const TreeDecomposition& td, int s, int t);

// Sum of [d - |T_{s->t}|]^+ over all ordered pairs (s,t) with st a tree
// edge, where T_{s->t} is the component of T - st containing s.
// pre: 1 <= d <= |T|; the sum is always >= d(d-1), with equality
// (|T|-1)|T| at d = |T|.
long long tree_lemma1_sum(const RootedTree& t, int d);

// Sum of [d - |T_{s->t}|]^+ over tree edges st leaving the node set tstar
// (s inside, t outside).  pre: tstar nonempty and connected in t,
// 1 <= d <= |T|.  The sum is always <= [d - |tstar|]^+.
long long tree_lemma2_lhs(const RootedTree& t, const std::vector<int>& tstar, int d);

// JSON round trip:
//   {"nodes": [...], "tree_edges": [[a,b], ...], "bags": {"a": [v, ...]}}
std::string decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const std::string& text);

} // namespace twc

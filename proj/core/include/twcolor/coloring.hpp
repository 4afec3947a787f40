#pragma once

#include <vector>

#include "twcolor/graph.hpp"

namespace twc {

// Proper edge coloring: color[i] is the color of g.edges()[i], colors are
// 0..colors-1 and edges sharing an endpoint get distinct colors.
struct EdgeColoring {
    int colors = 0;
    std::vector<int> color;
};

// True iff no two edges with a common endpoint share a color.  Throws
// InvalidInput when the color vector has the wrong length or an entry
// falls outside 0..colors-1.
bool validate_coloring(const Graph& g, const EdgeColoring& c);

// Constructive Vizing bound via fan rotation and alternating-path flips
// (Misra-Gries): a proper coloring with at most Delta+1 colors in
// polynomial time.  Deterministic: edges, fan vertices and colors are
// always picked smallest-first.
EdgeColoring vizing_color(const Graph& g);

// Is there a proper edge coloring with at most c colors?  Exhaustive
// backtracking over edges sorted by max endpoint degree (then lexicographic),
// with color symmetry broken by allowing color j only after 0..j-1 appeared.
bool edge_colorable(const Graph& g, int c, int edge_limit = 40);

// Exact chromatic index, Delta or Delta+1.  Throws TooLarge beyond
// edge_limit edges.
int chi_prime_exact(const Graph& g, int edge_limit = 40);

// Chromatic index Delta+1 and every single-edge deletion colorable with
// Delta(g) colors.
bool is_delta_critical(const Graph& g, int edge_limit = 40);

// Adjacency conditions every edge-chromatic-critical graph must satisfy.
// A violated instantiation certifies "not critical" (contrapositive); the
// checks are pure degree counting and need no coloring search.
enum class AdjacencyLemma {
    vizing_adjacency,  // uv edge: v has >= Delta - deg(u) + 1 neighbors of degree Delta
    zhang,             // path uwv, deg(u)+deg(w) = Delta+2: neighbors of v
                       // other than u,w all have degree Delta
    sanders_zhao,      // v adjacent to u and w, deg(u)+deg(v)+deg(w) <= 2*Delta+1:
                       // at most deg(u)+deg(v)-Delta-3 common neighbors x != u of v and w
};

const char* adjacency_lemma_name(AdjacencyLemma l);

struct Violation {
    AdjacencyLemma lemma;
    std::vector<int> vertices;  // witnessing vertices in instantiation order
};

// All violated instantiations, scanned in ascending vertex order.
std::vector<Violation> criticality_certificates(const Graph& g);

} // namespace twc

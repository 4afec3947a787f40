#include "twcolor/coloring.hpp"

#include <algorithm>

namespace twc {

const char* adjacency_lemma_name(AdjacencyLemma l) {
    switch (l) {
        case AdjacencyLemma::vizing_adjacency: return "vizing_adjacency";
        case AdjacencyLemma::zhang: return "zhang";
        case AdjacencyLemma::sanders_zhao: return "sanders_zhao";
    }
    return "?";
}

std::vector<Violation> criticality_certificates(const Graph& g) {
    std::vector<Violation> out;
    const int n = g.vertex_count();
    const int delta = g.max_degree();

    std::vector<int> deg(n), delta_neighbors(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (deg[w] == delta) ++delta_neighbors[v];

    // vizing_adjacency: for an edge uv, v must see at least
    // delta - deg(u) + 1 neighbors of maximum degree; both orientations
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (delta_neighbors[v] < delta - deg[u] + 1)
                out.push_back({AdjacencyLemma::vizing_adjacency, {u, v}});

    // zhang: path u-w-v with deg(u)+deg(w) = delta+2 forces every neighbor
    // x of v other than u,w to maximum degree
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) {
            if (deg[u] + deg[w] != delta + 2) continue;
            for (int v : g.neighbors(w)) {
                if (v == u) continue;
                for (int x : g.neighbors(v)) {
                    if (x == u || x == w) continue;
                    if (deg[x] != delta)
                        out.push_back({AdjacencyLemma::zhang, {u, w, v, x}});
                }
            }
        }

    // sanders_zhao: v adjacent to u and w (u != w) with
    // deg(u)+deg(v)+deg(w) <= 2*delta+1 caps the common neighbors x != u
    // of v and w at deg(u)+deg(v)-delta-3
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            for (int w : g.neighbors(v)) {
                if (w == u) continue;
                if (deg[u] + deg[v] + deg[w] > 2 * delta + 1) continue;
                int common = 0;
                for (int x : g.neighbors(v)) {
                    if (x == u) continue;
                    if (g.has_edge(x, w)) ++common;
                }
                if (common > deg[u] + deg[v] - delta - 3)
                    out.push_back({AdjacencyLemma::sanders_zhao, {u, v, w}});
            }

    return out;
}

} // namespace twc

#include "twcolor/graph.hpp"

#include <algorithm>
#include <cstdint>

namespace twc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside 0.." + std::to_string(n - 1));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(adj_[v].size());
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw Error(ErrorKind::TooLarge, "adjacency masks need n <= 64");
    std::vector<std::uint64_t> m(n_, 0);
    for (auto [u, v] : edges_) {
        m[u] |= std::uint64_t(1) << v;
        m[v] |= std::uint64_t(1) << u;
    }
    return m;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int k) {
    if (k < 1) throw Error(ErrorKind::BadParams, "complete_graph needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return Graph::from_edges(k, e);
}

Graph path_power(int n, int p) {
    if (n < 1 || p < 1) throw Error(ErrorKind::BadParams, "path_power needs n >= 1, p >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n && v <= u + p; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph delete_edge(const Graph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw Error(ErrorKind::InvalidInput, "edge index out of range");
    auto e = g.edges();
    e.erase(e.begin() + edge_index);
    return Graph::from_edges(g.vertex_count(), e);
}

DegeneracyResult degeneracy(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyResult res;
    res.order.reserve(n);
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        res.k = std::max(res.k, deg[best]);
        removed[best] = true;
        res.order.push_back(best);
        for (int u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    return res;
}

} // namespace twc

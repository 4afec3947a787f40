#include "twcolor/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace twc {

namespace {

// Number of vertices outside S u {v} reachable from v through S, i.e. the
// degree v would have when eliminated right after the set S: neighbors of
// the S-component around v, minus S and v itself.
int elimination_degree(const std::vector<std::uint32_t>& adj, std::uint32_t S, int v) {
    std::uint32_t inside = adj[v] & S;
    std::uint32_t outside = adj[v] & ~S;
    std::uint32_t frontier = inside;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[u];
        }
        outside |= next & ~S;
        next &= S & ~inside;
        inside |= next;
        frontier = next;
    }
    outside &= ~(std::uint32_t(1) << v);
    return std::popcount(outside);
}

} // namespace

TreewidthResult treewidth_exact(const Graph& g, int limit) {
    int n = g.vertex_count();
    if (n > limit)
        throw Error(ErrorKind::TooLarge, "treewidth_exact limited to " + std::to_string(limit) +
                                             " vertices, got " + std::to_string(n));
    if (n > 26) throw Error(ErrorKind::TooLarge, "treewidth_exact is capped at 26 vertices");

    TreewidthResult res;
    if (n == 0) {
        res.width = -1;
        res.decomposition.nodes = {0};
        res.decomposition.bags[0] = {};
        return res;
    }

    std::vector<std::uint32_t> adj32;
    {
        auto masks = g.adjacency_masks();
        adj32.assign(n, 0);
        for (int v = 0; v < n; ++v) adj32[v] = static_cast<std::uint32_t>(masks[v]);
    }
    const std::uint32_t full = (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);

    // suf[S] = least achievable maximum elimination degree when the
    // vertices of S are already gone and everything else still has to go.
    // Treewidth = suf[empty].
    std::vector<std::int8_t> suf(std::size_t(1) << n);
    suf[full] = -1;
    for (std::uint32_t S = full; S-- > 0;) {
        int best = 127;
        std::uint32_t rest = full & ~S;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int val = std::max(elimination_degree(adj32, S, v),
                               static_cast<int>(suf[S | (std::uint32_t(1) << v)]));
            if (val < best) best = val;
        }
        suf[S] = static_cast<std::int8_t>(best);
    }
    const int width = suf[0];

    // Lexicographically smallest elimination order achieving the optimum:
    // a prefix extends to a full order of cost <= width iff the next pick v
    // keeps both its own elimination degree and suf within the budget.
    std::vector<int> order;
    order.reserve(n);
    std::uint32_t S = 0;
    for (int step = 0; step < n; ++step) {
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = std::uint32_t(1) << v;
            if (S & bit) continue;
            if (std::max(elimination_degree(adj32, S, v), static_cast<int>(suf[S | bit])) <=
                width) {
                order.push_back(v);
                S |= bit;
                break;
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::InvalidInput, "treewidth reconstruction failed");

    // Standard elimination-order decomposition: bag(i) = order[i] plus its
    // not-yet-eliminated neighbors in the progressively filled-in graph,
    // node i attached to the node of the earliest-eliminated bag partner.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::uint32_t> fill = adj32;
    std::uint32_t remaining = full;
    TreeDecomposition td;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        remaining &= ~(std::uint32_t(1) << v);
        std::uint32_t nb = fill[v] & remaining;
        std::vector<int> bag{v};
        int attach = -1;
        std::uint32_t it = nb;
        while (it) {
            int u = std::countr_zero(it);
            it &= it - 1;
            bag.push_back(u);
            if (attach == -1 || pos[u] < pos[attach]) attach = u;
            fill[u] |= nb & ~(std::uint32_t(1) << u);
        }
        std::sort(bag.begin(), bag.end());
        td.nodes.push_back(i);
        td.bags[i] = std::move(bag);
        if (attach != -1)
            td.tree_edges.emplace_back(i, pos[attach]);
        else if (i + 1 < n)
            td.tree_edges.emplace_back(i, i + 1);
    }

    res.width = width;
    res.decomposition = std::move(td);

    auto check = validate_decomposition(g, res.decomposition);
    if (!check.valid || check.width != width)
        throw Error(ErrorKind::InvalidInput, "witness decomposition failed validation: " +
                                                 check.reason);
    return res;
}

TreewidthBounds treewidth_bounds(const Graph& g) {
    TreewidthBounds b;
    b.lower = degeneracy(g).k;

    // min-degree greedy elimination on an explicitly filled-in graph
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || adj[v].size() < adj[best].size())) best = v;
        width = std::max(width, static_cast<int>(adj[best].size()));
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (int u : nb) adj[u].erase(best);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        adj[best].clear();
        gone[best] = true;
    }
    b.upper = std::max(width, b.lower);
    return b;
}

} // namespace twc

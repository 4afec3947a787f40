#include "twcolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace twc {

namespace {

struct Searcher {
    const Graph* g;
    int c;
    std::vector<std::pair<int, int>> order;  // endpoints, hardest first
    std::vector<std::uint64_t> used;         // colors present at each vertex
    std::uint64_t full;

    bool dfs(size_t i, int colors_in_use) {
        if (i == order.size()) return true;
        auto [u, v] = order[i];
        // symmetry breaking: a fresh color only when all smaller ones appeared
        std::uint64_t cap =
            colors_in_use < c ? (std::uint64_t(1) << (colors_in_use + 1)) - 1 : full;
        std::uint64_t avail = full & cap & ~(used[u] | used[v]);
        while (avail) {
            int col = std::countr_zero(avail);
            avail &= avail - 1;
            std::uint64_t bit = std::uint64_t(1) << col;
            used[u] |= bit;
            used[v] |= bit;
            if (dfs(i + 1, std::max(colors_in_use, col + 1))) return true;
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
        return false;
    }
};

} // namespace

bool edge_colorable(const Graph& g, int c, int edge_limit) {
    if (g.edge_count() > edge_limit)
        throw Error(ErrorKind::TooLarge, "exact coloring search limited to " +
                                             std::to_string(edge_limit) + " edges");
    if (c < 0) throw Error(ErrorKind::BadParams, "color count must be >= 0");
    if (g.edge_count() == 0) return true;
    if (c == 0) return false;
    if (c > 62) throw Error(ErrorKind::TooLarge, "exact coloring search supports c <= 62");
    if (c < g.max_degree()) return false;

    // every color class is a matching, so c classes hold at most c*floor(n/2)
    if (static_cast<long long>(c) * (g.vertex_count() / 2) < g.edge_count()) return false;

    Searcher s;
    s.g = &g;
    s.c = c;
    s.full = (std::uint64_t(1) << c) - 1;
    s.used.assign(g.vertex_count(), 0);
    s.order = g.edges();
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&g](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                         int da = std::max(g.degree(a.first), g.degree(a.second));
                         int db = std::max(g.degree(b.first), g.degree(b.second));
                         if (da != db) return da > db;
                         return a < b;
                     });
    return s.dfs(0, 0);
}

int chi_prime_exact(const Graph& g, int edge_limit) {
    if (g.edge_count() == 0) return 0;
    int delta = g.max_degree();
    // Vizing: the answer is delta or delta+1, so one search decides
    return edge_colorable(g, delta, edge_limit) ? delta : delta + 1;
}

bool is_delta_critical(const Graph& g, int edge_limit) {
    if (g.edge_count() == 0) return false;
    int delta = g.max_degree();
    if (chi_prime_exact(g, edge_limit) != delta + 1) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!edge_colorable(delete_edge(g, e), delta, edge_limit)) return false;
    return true;
}

} // namespace twc

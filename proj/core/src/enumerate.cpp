#include "twcolor/enumerate.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace twc {

namespace {

// Stable degree refinement: start from degrees, repeatedly recolor each
// vertex by the sorted multiset of neighbor colors until the partition
// stops splitting.  Color ids are ranks of the sorted signatures, so they
// depend only on the isomorphism type.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int classes = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
            next[sorted[i].second] = classes;
        }
        bool split = false;
        for (int v = 0; v < n && !split; ++v)
            for (int u = 0; u < n && !split; ++u)
                if ((color[u] == color[v]) != (next[u] == next[v])) split = true;
        color = std::move(next);
        if (!split) return color;
    }
}

struct Minimizer {
    const Graph* g = nullptr;
    int n = 0;
    int total_bits = 0;
    std::vector<int> color;         // refined color per vertex
    std::vector<int> slot_color;    // required color at each position
    std::vector<int> perm;          // position -> vertex
    std::vector<bool> used;
    std::uint64_t best = ~0ULL;

    void place(int pos, std::uint64_t prefix, int bits) {
        if (pos == n) {
            if (prefix < best) best = prefix;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != slot_color[pos]) continue;
            std::uint64_t ext = prefix;
            for (int i = 0; i < pos; ++i)
                ext = (ext << 1) | (g->has_edge(perm[i], v) ? 1u : 0u);
            int ext_bits = bits + pos;
            // compare against the same-length prefix of the incumbent
            if (best != ~0ULL && ext > (best >> (total_bits - ext_bits))) continue;
            used[v] = true;
            perm[pos] = v;
            place(pos + 1, ext, ext_bits);
            used[v] = false;
        }
    }
};

} // namespace

std::uint64_t canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw Error(ErrorKind::TooLarge, "canonical form needs n <= 11");
    if (n <= 1) return 0;

    Minimizer m;
    m.g = &g;
    m.n = n;
    m.total_bits = n * (n - 1) / 2;
    m.color = refined_colors(g);
    m.slot_color.assign(m.color.begin(), m.color.end());
    std::sort(m.slot_color.begin(), m.slot_color.end());
    m.perm.assign(n, -1);
    m.used.assign(n, false);
    m.place(0, 0, 0);
    return m.best;
}

Graph graph_from_bitstring(int n, std::uint64_t bits) {
    if (n > 11 || n < 0) throw Error(ErrorKind::TooLarge, "bitstring graphs need 0 <= n <= 11");
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((bits >> (total - 1 - b)) & 1) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

long long for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 0 || n > 9) throw Error(ErrorKind::TooLarge, "exhaustive enumeration needs n <= 9");

    long long visited = 0;
    std::vector<std::uint64_t> level = {0};  // the edgeless graph
    const int max_edges = n * (n - 1) / 2;
    for (int m = 0; m <= max_edges && !level.empty(); ++m) {
        std::sort(level.begin(), level.end());
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t form : level) {
            Graph g = graph_from_bitstring(n, form);
            visit(g);
            ++visited;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    std::vector<std::pair<int, int>> edges(g.edges());
                    edges.emplace_back(u, v);
                    next.insert(canonical_form(build_graph(n, edges)));
                }
        }
        level.assign(next.begin(), next.end());
    }
    return visited;
}

} // namespace twc

#include "twcolor/coloring.hpp"

#include <bit>
#include <algorithm>
#include <cstdint>
#include <map>

namespace twc {

bool validate_coloring(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.edge_count())
        throw Error(ErrorKind::InvalidInput, "coloring size differs from edge count");
    for (size_t i = 0; i < c.color.size(); ++i)
        if (c.color[i] < 0 || c.color[i] >= c.colors)
            throw Error(ErrorKind::InvalidInput,
                        "edge " + std::to_string(i) + " has no color in 0..c-1");
    int n = g.vertex_count();
    std::vector<std::vector<char>> seen(n, std::vector<char>(c.colors, 0));
    for (size_t i = 0; i < c.color.size(); ++i) {
        auto [u, v] = g.edges()[i];
        int col = c.color[i];
        if (seen[u][col] || seen[v][col]) return false;
        seen[u][col] = seen[v][col] = 1;
    }
    return true;
}

namespace {

// Working state for the fan/path recoloring.  Colors are 0..delta, so all
// per-vertex color sets fit in one 64-bit mask as long as delta < 63,
// which covers everything the exact solvers accept and far beyond.
struct Palette {
    int delta;
    std::uint64_t full;
    std::vector<std::uint64_t> used;              // per vertex
    std::vector<std::map<int, int>> at;           // at[v][color] = other endpoint
    std::vector<int> color;                       // per edge, -1 = uncolored
    const Graph* g;
    std::vector<std::map<int, int>> eidx;         // eidx[u][v] = edge index

    explicit Palette(const Graph& graph) : g(&graph) {
        delta = graph.max_degree();
        if (delta > 62)
            throw Error(ErrorKind::TooLarge, "vizing_color supports maximum degree <= 62");
        full = (std::uint64_t(1) << (delta + 1)) - 1;
        used.assign(graph.vertex_count(), 0);
        at.resize(graph.vertex_count());
        eidx.resize(graph.vertex_count());
        color.assign(graph.edge_count(), -1);
        for (int i = 0; i < graph.edge_count(); ++i) {
            auto [u, v] = graph.edges()[i];
            eidx[u][v] = i;
            eidx[v][u] = i;
        }
    }

    int smallest_free(int v) const {
        std::uint64_t f = full & ~used[v];
        return f ? std::countr_zero(f) : -1;
    }

    bool is_free(int v, int c) const { return !(used[v] >> c & 1); }

    void set(int u, int v, int c) {
        color[eidx[u][v]] = c;
        used[u] |= std::uint64_t(1) << c;
        used[v] |= std::uint64_t(1) << c;
        at[u][c] = v;
        at[v][c] = u;
    }

    void unset(int u, int v) {
        int& c = color[eidx[u][v]];
        used[u] &= ~(std::uint64_t(1) << c);
        used[v] &= ~(std::uint64_t(1) << c);
        at[u].erase(c);
        at[v].erase(c);
        c = -1;
    }

    int color_of(int u, int v) const { return color[eidx.at(u).at(v)]; }
};

// Flip colors c and d along the maximal alternating path starting at u.
// c is free at u, so the path leaves u on a d-colored edge if one exists.
// The path is collected before any recoloring: flipping in place would
// corrupt the color->endpoint lookup the walk relies on.
void invert_path(Palette& p, int u, int c, int d) {
    struct Step {
        int a, b, old_color;
    };
    std::vector<Step> path;
    int cur = u;
    int want = d;
    while (true) {
        auto it = p.at[cur].find(want);
        if (it == p.at[cur].end()) break;
        path.push_back({cur, it->second, want});
        cur = it->second;
        want = (want == c) ? d : c;
    }
    for (const Step& s : path) p.unset(s.a, s.b);
    for (const Step& s : path) p.set(s.a, s.b, s.old_color == c ? d : c);
}

} // namespace

EdgeColoring vizing_color(const Graph& g) {
    Palette p(g);
    const int delta = p.delta;

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];

        // maximal fan of u starting at v: each next edge's color is free
        // at the previous fan vertex
        std::vector<int> fan{v};
        std::vector<char> fanned(g.vertex_count(), 0);
        fanned[v] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            int tail = fan.back();
            for (int w : g.neighbors(u)) {
                if (fanned[w]) continue;
                int cw = p.color[p.eidx[u][w]];
                if (cw >= 0 && p.is_free(tail, cw)) {
                    fan.push_back(w);
                    fanned[w] = 1;
                    grew = true;
                    break;
                }
            }
        }

        int c = p.smallest_free(u);
        int d = p.smallest_free(fan.back());
        if (c < 0 || d < 0)
            throw Error(ErrorKind::InvalidInput, "no free color available");

        if (c != d) invert_path(p, u, c, d);

        // first fan vertex (over a still-valid prefix) where d became free
        int w = -1;
        for (size_t j = 0; j < fan.size(); ++j) {
            if (j > 0) {
                int cj = p.color[p.eidx[u][fan[j]]];
                if (cj < 0 || !p.is_free(fan[j - 1], cj)) break;
            }
            if (p.is_free(fan[j], d) && p.is_free(u, d)) {
                w = static_cast<int>(j);
                break;
            }
        }
        if (w < 0)
            throw Error(ErrorKind::InvalidInput, "fan rotation found no recolorable vertex");

        // rotate: shift each fan edge's color one step toward the new edge,
        // freeing the whole prefix first so every reassignment lands on a
        // color that is genuinely free at both endpoints
        std::vector<int> shift(w + 1, -1);
        for (int j = 1; j <= w; ++j) shift[j] = p.color[p.eidx[u][fan[j]]];
        for (int j = 1; j <= w; ++j) p.unset(u, fan[j]);
        for (int j = 0; j < w; ++j) p.set(u, fan[j], shift[j + 1]);
        p.set(u, fan[w], d);
    }

    EdgeColoring out;
    out.color = p.color;
    int maxc = -1;
    for (int c : out.color) maxc = std::max(maxc, c);
    out.colors = maxc + 1;

    if (!validate_coloring(g, out) || out.colors > delta + 1)
        throw Error(ErrorKind::InvalidInput, "fan recoloring produced an improper coloring");
    return out;
}

} // namespace twc

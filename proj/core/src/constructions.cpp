#include "twcolor/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "twcolor/bounds.hpp"
#include "twcolor/prng.hpp"

namespace twc {

std::optional<int> erdos_gallai_failure(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i) {
        if (d[i] < 0) throw Error(ErrorKind::NotSorted, "degrees must be non-negative");
        if (i > 0 && d[i] > d[i - 1])
            throw Error(ErrorKind::NotSorted, "degree sequence must be non-increasing");
    }
    long long sum = 0;
    for (int x : d) sum += x;
    if (sum % 2 != 0) return 0;
    for (int l = 1; l <= n; ++l) {
        long long lhs = 0;
        for (int i = 0; i < l; ++i) lhs += d[i];
        long long rhs = static_cast<long long>(l) * (l - 1);
        for (int i = l; i < n; ++i) rhs += std::min(d[i], l);
        if (lhs > rhs) return l;
    }
    return std::nullopt;
}

bool erdos_gallai_graphic(const std::vector<int>& d) { return !erdos_gallai_failure(d); }

Graph havel_hakimi_realize(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i) {
        if (d[i] < 0) throw Error(ErrorKind::NotSorted, "degrees must be non-negative");
        if (i > 0 && d[i] > d[i - 1])
            throw Error(ErrorKind::NotSorted, "degree sequence must be non-increasing");
    }
    // remaining demand per vertex; ties broken by vertex id keep the
    // output a pure function of the input sequence
    std::vector<int> rem = d;
    std::vector<std::pair<int, int>> edges;
    for (;;) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (rem[v] > 0 && (u == -1 || rem[v] > rem[u])) u = v;
        if (u == -1) break;
        int need = rem[u];
        rem[u] = 0;
        // the `need` largest other demands
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
            if (v != u && rem[v] > 0) others.push_back(v);
        std::stable_sort(others.begin(), others.end(),
                         [&rem](int a, int b) { return rem[a] > rem[b]; });
        if (static_cast<int>(others.size()) < need)
            throw Error(ErrorKind::NotGraphic, "sequence is not graphic");
        for (int i = 0; i < need; ++i) {
            int v = others[i];
            --rem[v];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    Graph g = build_graph(n, edges);
    if (g.edge_count() != static_cast<int>(edges.size()))
        throw Error(ErrorKind::NotGraphic, "realization produced duplicate edges");
    std::vector<int> got = g.degree_sequence();
    std::vector<int> want = d;  // already non-increasing
    if (got != want) throw Error(ErrorKind::NotGraphic, "realized degrees differ from input");
    return g;
}

namespace {

int isqrt(long long x) {
    if (x < 0) throw Error(ErrorKind::BadParams, "isqrt of negative value");
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return static_cast<int>(s);
}

std::vector<int> lemma7_sequence(int c, int r) {
    std::vector<int> d(c + r);
    for (int i = 0; i <= r; ++i) d[i] = c;
    for (int i = 1; i < c; ++i) d[r + i] = c - i;
    return d;
}

} // namespace

bool lemma7_check(int c, int r) {
    if (c < 1 || r < 1) throw Error(ErrorKind::BadParams, "lemma7_check needs c >= 1, r >= 1");
    bool ok = (static_cast<long long>(c) * (2LL * r + c + 1)) % 4 == 0 &&
              static_cast<long long>(r) * r >= c;
    if (ok && !erdos_gallai_graphic(lemma7_sequence(c, r)))
        throw Error(ErrorKind::InvalidInput,
                    "arithmetic test disagrees with the Erdos-Gallai check");
    return ok;
}

int select_k(int k0) {
    if (k0 < 1) throw Error(ErrorKind::BadParams, "select_k needs k0 >= 1");
    for (int k = k0; k <= k0 + 8; ++k) {
        int s = isqrt(k);
        if (s * s != k && k % 8 == s % 8) return k;
    }
    throw Error(ErrorKind::BadParams,
                "no admissible k in " + std::to_string(k0) + ".." + std::to_string(k0 + 8));
}

Graph construct_apex(int k, int r) {
    if (k < 1 || r < 1) throw Error(ErrorKind::BadParams, "construct_apex needs k >= 1, r >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    for (int a = 0; a < r; ++a)
        for (int u = 0; u < k; ++u) edges.emplace_back(u, k + a);
    Graph g = build_graph(k + r, edges);

    // the whole point of this family: equality in the treewidth edge bound
    long long rhs = edge_bound_rhs(k + r, g.max_degree(), k, BoundModel::treewidth);
    if (2LL * g.edge_count() != rhs)
        throw Error(ErrorKind::InvalidInput, "apex family lost edge-bound equality");
    return g;
}

Graph construct_stars_complement(int p) {
    if (p < 1) throw Error(ErrorKind::BadParams, "construct_stars_complement needs p >= 1");
    const int n = p + p * (p + 1) / 2;
    // centers 0..p-1; center i-1 (1-indexed i) owns i leaves
    std::vector<std::pair<int, int>> star_edges;
    int next_leaf = p;
    for (int i = 1; i <= p; ++i)
        for (int j = 0; j < i; ++j) star_edges.emplace_back(i - 1, next_leaf++);
    Graph stars = build_graph(n, star_edges);
    Graph g = complement(stars);

    if (g.max_degree() != n - 2)
        throw Error(ErrorKind::InvalidInput, "star complement lost its degree profile");
    for (int i = 1; i <= p; ++i)
        if (g.degree(i - 1) != n - 1 - i)
            throw Error(ErrorKind::InvalidInput, "star complement lost its degree profile");
    int k = degeneracy(g).k;
    if (k != n - 1 - p)
        throw Error(ErrorKind::InvalidInput, "star complement has unexpected degeneracy");
    if (2LL * g.edge_count() != edge_bound_rhs(n, n - 2, k, BoundModel::degenerate))
        throw Error(ErrorKind::InvalidInput, "star complement lost edge-bound equality");
    return g;
}

TightParams tight_params(int k, int delta, int n) {
    TightParams p;
    p.k = k;
    p.delta = delta;
    p.c = k - delta / 2;
    p.r = delta - k;
    p.n = n;
    if (k < 1) throw Error(ErrorKind::BadParams, "tight construction needs k >= 1");
    if (delta % 2 != 0) throw Error(ErrorKind::BadParams, "tight construction needs even delta");
    if (p.c < 0) throw Error(ErrorKind::BadParams, "tight construction needs delta <= 2k");
    if (p.r < 0) throw Error(ErrorKind::BadParams, "tight construction needs delta >= k");
    if (n < 4 * k) throw Error(ErrorKind::BadParams, "tight construction needs n >= 4k");
    if (p.c > 0) {
        if (p.r < 1 || !lemma7_check(p.c, p.r))
            throw Error(ErrorKind::BadParams,
                        "patch sequence is not realizable: need 4 | c(2r+c+1) and r^2 >= c");
    }
    return p;
}

TightParams tight_params_from_k0(int k0, int n) {
    int k = select_k(k0);
    return tight_params(k, k + isqrt(k), n);
}

TightConstruction construct_tight(const TightParams& params) {
    const TightParams p = tight_params(params.k, params.delta, params.n);  // re-validate
    const int n = p.n, k = p.k, delta = p.delta, half = p.delta / 2;

    // all positions below are 1-indexed like the degree profile; stored
    // edges are 0-indexed
    std::set<std::pair<int, int>> edges;
    auto add = [&edges, n](int i, int j) {  // 1-indexed, with mirror
        auto put = [&edges](int a, int b) {
            if (a > b) std::swap(a, b);
            if (!edges.emplace(a - 1, b - 1).second)
                throw Error(ErrorKind::EmbedFail, "tight construction re-added an edge");
        };
        put(i, j);
        put(n + 1 - i, n + 1 - j);
    };
    auto remove = [&edges, n](int i, int j) {
        auto drop = [&edges](int a, int b) {
            if (a > b) std::swap(a, b);
            if (edges.erase({a - 1, b - 1}) != 1)
                throw Error(ErrorKind::EmbedFail, "tight construction removed a missing edge");
        };
        drop(i, j);
        drop(n + 1 - i, n + 1 - j);
    };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n && j <= i + half; ++j) edges.emplace(i - 1, j - 1);

    // raise the low end-degrees to the target profile: position i <= r
    // needs c more edges, positions r+1..half taper off toward the middle
    for (int i = 1; i <= p.r; ++i)
        for (int j = i + half + 1; j <= i + k; ++j) add(i, j);
    for (int i = p.r + 1; i <= half; ++i)
        for (int j = i + half + 1; j <= delta + 1; ++j) add(i, j);

    if (p.c > 0) {
        // positions half+2 .. delta+1 now overshoot by (1, ..., c-1, c, ..., c);
        // they induce a clique, so any realization of that overshoot embeds.
        // Sorting positions by overshoot descending pairs them with the
        // non-increasing patch sequence vertex by vertex.
        Graph h = havel_hakimi_realize(lemma7_sequence(p.c, p.r));
        std::vector<int> pos_by_excess;  // h vertex t -> 1-indexed position
        for (int i = k + 1; i <= delta + 1; ++i) pos_by_excess.push_back(i);  // excess c
        for (int i = k; i >= half + 2; --i) pos_by_excess.push_back(i);       // c-1 down to 1
        for (auto [a, b] : h.edges()) remove(pos_by_excess[a], pos_by_excess[b]);
    }

    TightConstruction out;
    out.params = p;
    out.graph = build_graph(n, {edges.begin(), edges.end()});

    // the degree profile and the edge-count identity are the contract
    for (int i = 1; i <= n; ++i) {
        int want = k - 1 + std::min({i, n + 1 - i, p.r + 1});
        if (out.graph.degree(i - 1) != want)
            throw Error(ErrorKind::InvalidInput,
                        "tight construction degree profile broken at position " +
                            std::to_string(i));
    }
    if (2LL * out.graph.edge_count() !=
        edge_bound_rhs(n, delta, k, BoundModel::treewidth))
        throw Error(ErrorKind::InvalidInput, "tight construction lost edge-bound equality");

    // every edge spans at most k positions, so the path-of-cliques
    // decomposition of the k-th path power carries the graph at width k
    for (int i = 0; i < n - k; ++i) {
        out.decomposition.nodes.push_back(i);
        std::vector<int> bag(k + 1);
        for (int j = 0; j <= k; ++j) bag[j] = i + j;
        out.decomposition.bags[i] = std::move(bag);
        if (i > 0) out.decomposition.tree_edges.emplace_back(i - 1, i);
    }
    auto check = validate_decomposition(out.graph, out.decomposition);
    if (!check.valid || check.width != k)
        throw Error(ErrorKind::InvalidInput, "tight construction witness failed validation");
    return out;
}

Graph random_partial_ktree(int n, int k, const Rational& keep, std::uint64_t seed) {
    if (k < 1 || n < k + 1)
        throw Error(ErrorKind::BadParams, "random_partial_ktree needs k >= 1 and n >= k+1");
    if (keep < Rational(0) || Rational(1) < keep)
        throw Error(ErrorKind::BadParams, "keep probability must lie in [0, 1]");

    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cliques;  // all k-cliques of the k-tree
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> c;
        for (int u = 0; u <= k; ++u)
            if (u != skip) c.push_back(u);
        cliques.push_back(std::move(c));
    }
    for (int v = k + 1; v < n; ++v) {
        const std::vector<int> c = cliques[rng.next_below(cliques.size())];
        for (int u : c) edges.emplace_back(u, v);
        for (int skip = 0; skip < k; ++skip) {
            std::vector<int> fresh;
            for (int i = 0; i < k; ++i)
                if (i != skip) fresh.push_back(c[i]);
            fresh.push_back(v);
            cliques.push_back(std::move(fresh));
        }
    }

    Graph ktree = build_graph(n, edges);
    std::vector<std::pair<int, int>> kept;
    for (auto e : ktree.edges())
        if (rng.next_below(static_cast<std::uint64_t>(keep.den())) <
            static_cast<std::uint64_t>(keep.num()))
            kept.push_back(e);
    return build_graph(n, kept);
}

} // namespace twc

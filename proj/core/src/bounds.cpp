#include "twcolor/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace twc {

const char* bound_model_name(BoundModel m) {
    switch (m) {
        case BoundModel::treewidth: return "treewidth";
        case BoundModel::rose: return "rose";
        case BoundModel::degenerate: return "degenerate";
    }
    return "?";
}

long long edge_bound_rhs(int n, int delta, int k, BoundModel model) {
    if (n < 0 || delta < 0 || k < 0)
        throw Error(ErrorKind::HypothesisViolated, "bound parameters must be non-negative");
    long long N = n, D = delta, K = k;
    switch (model) {
        case BoundModel::treewidth:
            if (delta < k)
                throw Error(ErrorKind::HypothesisViolated, "treewidth bound needs delta >= k");
            return D * N - (D - K) * (D - K + 1);
        case BoundModel::rose:
            return 2 * K * N - K * (K + 1);
        case BoundModel::degenerate:
            if (delta < k)
                throw Error(ErrorKind::HypothesisViolated, "degenerate bound needs delta >= k");
            return D * N - (D - K) * (D - K + 1) / 2;
    }
    throw Error(ErrorKind::HypothesisViolated, "unknown bound model");
}

BoundReport check_edge_bound(const Graph& g, int k, BoundModel model) {
    BoundReport r;
    r.model = model;
    r.n = g.vertex_count();
    r.delta = g.max_degree();
    r.k = k;
    r.rhs = edge_bound_rhs(r.n, r.delta, r.k, model);
    r.actual = 2LL * g.edge_count();
    r.satisfied = r.actual <= r.rhs;
    r.tight = r.actual == r.rhs;
    return r;
}

bool is_overfull(const Graph& g) {
    long long n = g.vertex_count();
    if (n % 2 == 0) return false;
    return 2LL * g.edge_count() > static_cast<long long>(g.max_degree()) * (n - 1);
}

std::optional<std::vector<int>> find_overfull_subgraph(const Graph& g, int limit) {
    int n = g.vertex_count();
    if (n > limit || n > 30)
        throw Error(ErrorKind::TooLarge, "overfull subgraph scan limited to " +
                                             std::to_string(std::min(limit, 30)) + " vertices");
    if (n == 0) return std::nullopt;
    const int delta = g.max_degree();
    auto adj = g.adjacency_masks();

    // A candidate S must keep some vertex at degree delta, i.e. contain the
    // closed neighborhood of a maximum-degree vertex of g.
    std::uint64_t needed_any = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == delta) needed_any |= std::uint64_t(1) << v;

    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    for (std::uint64_t S = 0; S <= full; ++S) {
        int size = std::popcount(S);
        if (size < 3 || size % 2 == 0) continue;
        bool keeps_delta = false;
        std::uint64_t cand = needed_any & S;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if ((adj[v] & S) == adj[v]) {  // all neighbors of v inside S
                keeps_delta = true;
                break;
            }
        }
        if (!keeps_delta) continue;
        long long inside = 0;
        std::uint64_t it = S;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            inside += std::popcount(adj[v] & S);
        }
        inside /= 2;
        if (2 * inside > static_cast<long long>(delta) * (size - 1)) {
            std::vector<int> out;
            std::uint64_t s = S;
            while (s) {
                out.push_back(std::countr_zero(s));
                s &= s - 1;
            }
            return out;
        }
    }
    return std::nullopt;
}

bool verify_lemma4(const Graph& g, int k) {
    int delta = g.max_degree();
    if (k < 0 || delta < k || static_cast<long long>(delta - k) * (delta - k) < k)
        throw Error(ErrorKind::HypothesisViolated,
                    "needs delta >= k and (delta-k)^2 >= k, got delta=" + std::to_string(delta) +
                        " k=" + std::to_string(k));
    return !is_overfull(g);
}

bool degenerate_degree_threshold(int delta, int k) {
    if (delta < 0 || k < 0) return false;
    long long t = 2LL * delta - 2LL * k - 1;
    return t > 0 && t * t >= 8LL * k + 1;
}

} // namespace twc

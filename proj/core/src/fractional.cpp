#include "twcolor/fractional.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace twc {

FractionalIndex fractional_chi_prime(const Graph& g, int limit) {
    int n = g.vertex_count();
    if (n > limit || n > 30)
        throw Error(ErrorKind::TooLarge, "odd-set scan limited to " +
                                             std::to_string(std::min(limit, 30)) + " vertices");
    FractionalIndex out;
    const int delta = g.max_degree();
    out.value = Rational(delta);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == delta) {
            out.witness_vertex = v;
            break;
        }
    if (n < 3) return out;

    auto adj = g.adjacency_masks();
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t S = 0; S <= full; ++S) {
        int size = std::popcount(S);
        if (size < 3 || size % 2 == 0) continue;
        long long inside = 0;
        std::uint64_t it = S;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            inside += std::popcount(adj[v] & S);
        }
        Rational density(inside, size - 1);  // inside = 2|E(S)| already
        if (density > out.value) {
            out.value = density;
            std::vector<int> set;
            std::uint64_t s = S;
            while (s) {
                set.push_back(std::countr_zero(s));
                s &= s - 1;
            }
            out.odd_set = std::move(set);
            out.witness_vertex = -1;
        }
    }
    return out;
}

std::vector<std::vector<int>> enumerate_matchings(const Graph& g, int edge_limit) {
    int m = g.edge_count();
    if (m > edge_limit)
        throw Error(ErrorKind::TooLarge, "matching enumeration limited to " +
                                             std::to_string(edge_limit) + " edges");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> busy(g.vertex_count(), 0);
    auto extend = [&](auto&& self, int start) -> void {
        for (int e = start; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            if (busy[u] || busy[v]) continue;
            busy[u] = busy[v] = 1;
            cur.push_back(e);
            out.push_back(cur);
            self(self, e + 1);
            cur.pop_back();
            busy[u] = busy[v] = 0;
        }
    };
    extend(extend, 0);
    return out;
}

Rational fractional_via_lp(const Graph& g, int edge_limit) {
    const int m = g.edge_count();
    if (m == 0) return Rational(0);
    auto matchings = enumerate_matchings(g, edge_limit);
    const int N = static_cast<int>(matchings.size());

    // position of each singleton {e}; they form the identity start basis
    std::vector<int> singleton(m, -1);
    for (int j = 0; j < N; ++j)
        if (matchings[j].size() == 1) singleton[matchings[j][0]] = j;

    // revised simplex state: basis inverse, basic variables, basic solution
    std::vector<std::vector<Rational>> binv(m, std::vector<Rational>(m, Rational(0)));
    std::vector<int> basis(m);
    std::vector<Rational> x(m, Rational(1));
    for (int i = 0; i < m; ++i) {
        binv[i][i] = Rational(1);
        basis[i] = singleton[i];
    }

    for (;;) {
        // y = c_B' * B^{-1}; every cost is 1
        std::vector<Rational> y(m, Rational(0));
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < m; ++r) y[r] += binv[i][r];

        // Bland: first column with negative reduced cost 1 - y'A_j
        int enter = -1;
        for (int j = 0; j < N; ++j) {
            Rational yA(0);
            for (int e : matchings[j]) yA += y[e];
            if (Rational(1) < yA) {
                enter = j;
                break;
            }
        }
        if (enter == -1) {
            Rational value(0);
            for (int i = 0; i < m; ++i) value += x[i];
            return value;
        }

        // direction d = B^{-1} A_enter
        std::vector<Rational> d(m, Rational(0));
        for (int i = 0; i < m; ++i)
            for (int e : matchings[enter]) d[i] += binv[i][e];

        // ratio test, ties by smallest basic variable index (Bland)
        int leave = -1;
        Rational best(0);
        for (int i = 0; i < m; ++i) {
            if (!(Rational(0) < d[i])) continue;
            Rational ratio = x[i] / d[i];
            if (leave == -1 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == -1)
            throw Error(ErrorKind::InvalidInput, "fractional edge coloring LP is unbounded");

        // pivot: row `leave` of B^{-1} scaled, eliminated from the others
        Rational piv = d[leave];
        for (int r = 0; r < m; ++r) binv[leave][r] /= piv;
        x[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            if (d[i] == Rational(0)) continue;
            Rational f = d[i];
            for (int r = 0; r < m; ++r) binv[i][r] -= f * binv[leave][r];
            x[i] -= f * x[leave];
        }
        basis[leave] = enter;
    }
}

} // namespace twc

#include "twcolor/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twc {

namespace {

struct MutableTd {
    std::map<int, std::set<int>> bags;
    std::map<int, std::set<int>> adj;
    int next_id = 0;

    void add_edge(int a, int b) {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    // Merge node s into its neighbor t (bag of s is contained in bag of t).
    void contract(int s, int t) {
        for (int u : adj[s])
            if (u != t) add_edge(u, t);
        for (int u : adj[s]) adj[u].erase(s);
        adj.erase(s);
        bags.erase(s);
    }
};

} // namespace

TreeDecomposition smooth(const Graph& g, const TreeDecomposition& td) {
    auto report = validate_decomposition(g, td);
    if (!report.valid)
        throw Error(ErrorKind::InvalidInput, "smooth needs a valid decomposition: " + report.reason);
    const int k = report.width;

    MutableTd m;
    for (int t : td.nodes) {
        m.bags[t] = std::set<int>(td.bags.at(t).begin(), td.bags.at(t).end());
        m.adj[t];
        m.next_id = std::max(m.next_id, t + 1);
    }
    for (auto [a, b] : td.tree_edges) m.add_edge(a, b);

    // Phase 1: contract nested neighbors and pad undersized bags until all
    // bags have exactly k+1 vertices.  Padding pulls the smallest vertex of
    // an adjacent bag, which keeps every vertex's occupied nodes connected.
    // Mutations are deferred out of the scan loops: contraction erases map
    // entries and would invalidate the iterators.
    for (;;) {
        int from = -1, into = -1;
        for (const auto& [s, bs] : m.bags) {
            for (int t : m.adj[s]) {
                const auto& bt = m.bags[t];
                if (std::includes(bt.begin(), bt.end(), bs.begin(), bs.end())) {
                    from = s;
                    into = t;
                    break;
                }
            }
            if (from != -1) break;
        }
        if (from != -1) {
            m.contract(from, into);
            continue;
        }

        int pad_node = -1, pad_vertex = -1;
        for (const auto& [t, bag] : m.bags) {
            if (static_cast<int>(bag.size()) >= k + 1) continue;
            // no neighbor bag is nested, so some neighbor offers a new vertex
            for (int s : m.adj[t]) {
                std::vector<int> diff;
                std::set_difference(m.bags[s].begin(), m.bags[s].end(), bag.begin(), bag.end(),
                                    std::back_inserter(diff));
                if (!diff.empty()) {
                    pad_node = t;
                    pad_vertex = diff.front();
                    break;
                }
            }
            if (pad_node != -1) break;
        }
        if (pad_node == -1) break;
        m.bags[pad_node].insert(pad_vertex);
    }

    // Phase 2: subdivide every edge whose bags differ in more than one
    // vertex into a chain of single-vertex swaps.  The discarded vertices
    // cannot live beyond the far endpoint (they are missing from its bag),
    // so connectivity of occupied nodes is preserved.
    std::vector<std::pair<int, int>> worklist;
    for (const auto& [s, nb] : m.adj)
        for (int t : nb)
            if (s < t) worklist.emplace_back(s, t);
    for (auto [s, t] : worklist) {
        std::vector<int> xs, ys;
        std::set_difference(m.bags[s].begin(), m.bags[s].end(), m.bags[t].begin(),
                            m.bags[t].end(), std::back_inserter(xs));
        std::set_difference(m.bags[t].begin(), m.bags[t].end(), m.bags[s].begin(),
                            m.bags[s].end(), std::back_inserter(ys));
        if (xs.size() != ys.size())
            throw Error(ErrorKind::InvalidInput, "bags out of balance after padding");
        if (xs.size() <= 1) continue;
        m.adj[s].erase(t);
        m.adj[t].erase(s);
        int prev = s;
        std::set<int> bag = m.bags[s];
        for (size_t i = 0; i + 1 < xs.size(); ++i) {
            bag.erase(xs[i]);
            bag.insert(ys[i]);
            int fresh = m.next_id++;
            m.bags[fresh] = bag;
            m.add_edge(prev, fresh);
            prev = fresh;
        }
        m.add_edge(prev, t);
    }

    TreeDecomposition out;
    for (const auto& [t, bag] : m.bags) {
        out.nodes.push_back(t);
        out.bags[t] = std::vector<int>(bag.begin(), bag.end());
    }
    for (const auto& [s, nb] : m.adj)
        for (int t : nb)
            if (s < t) out.tree_edges.emplace_back(s, t);

    auto check = validate_decomposition(g, out);
    if (!check.valid || !check.smooth || check.width != k)
        throw Error(ErrorKind::InvalidInput, "smoothing produced an invalid decomposition: " +
                                                 check.reason);
    if (static_cast<int>(out.nodes.size()) != g.vertex_count() - k)
        throw Error(ErrorKind::InvalidInput, "smooth decomposition must have n-k nodes");
    return out;
}

} // namespace twc

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "test_helpers.hpp"
#include "twcolor/constructions.hpp"
#include "twcolor/decomposition.hpp"
#include "twcolor/treewidth.hpp"

using namespace twc;

namespace {

// Independent treewidth oracle: simulate every elimination order with
// plain adjacency sets and take the best worst bag.  Exponential, so only
// for tiny graphs; shares nothing with the subset DP under test.
int treewidth_by_all_orders(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;  // any graph eliminates with width <= n-1
    do {
        std::vector<std::set<int>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        int worst = -1;
        for (int v : order) {
            worst = std::max(worst, static_cast<int>(adj[v].size()));
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            for (int a : nb) {
                adj[a].erase(v);
                for (int b : nb)
                    if (a != b) adj[a].insert(b);
            }
            adj[v].clear();
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

TreeDecomposition path_of_bags(const std::vector<std::vector<int>>& bags) {
    TreeDecomposition td;
    for (size_t i = 0; i < bags.size(); ++i) {
        td.nodes.push_back(static_cast<int>(i));
        td.bags[static_cast<int>(i)] = bags[i];
        if (i > 0) td.tree_edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    return td;
}

RootedTree make_tree(int n, const std::vector<std::pair<int, int>>& parent_child) {
    RootedTree t;
    for (int i = 0; i < n; ++i) t.nodes.push_back(i);
    t.root = 0;
    for (auto [p, c] : parent_child) t.parent[c] = p;
    return t;
}

} // namespace

TEST_CASE("validate_decomposition accepts the textbook cases") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    ValidationReport r = validate_decomposition(p4, path_of_bags({{0, 1}, {1, 2}, {2, 3}}));
    CHECK(r.valid);
    CHECK(r.width == 1);
    CHECK(r.smooth);

    Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    r = validate_decomposition(triangle, path_of_bags({{0, 1, 2}}));
    CHECK(r.valid);
    CHECK(r.width == 2);
    CHECK(r.smooth);

    r = validate_decomposition(triangle, path_of_bags({{0, 1}, {1, 2}}));
    CHECK_FALSE(r.valid);  // edge {0,2} covered by no bag

    // vertex 2's bags must form a connected subtree
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    TreeDecomposition broken = path_of_bags({{0, 1, 2}, {0, 1}, {1, 2}});
    CHECK_FALSE(validate_decomposition(p3, broken).valid);

    TreeDecomposition oob = path_of_bags({{0, 7}});
    CHECK_THROWS_WITH_AS(validate_decomposition(p3, oob), doctest::Contains("BagVertexOutOfRange"),
                         Error);
}

TEST_CASE("treewidth matches the all-orders oracle on small graphs") {
    CHECK(treewidth_exact(twctest::cycle(5)).width == treewidth_by_all_orders(twctest::cycle(5)));
    CHECK(treewidth_exact(twctest::cycle(5)).width == 2);
    for (int k = 1; k <= 5; ++k) CHECK(treewidth_exact(complete_graph(k + 1)).width == k);
    for (std::uint64_t s = 0; s < 12; ++s) {
        Graph g = twctest::random_graph(6, 1, 2, s);
        CHECK(treewidth_exact(g).width == treewidth_by_all_orders(g));
    }
    for (std::uint64_t s = 0; s < 4; ++s) {
        Graph g = twctest::random_graph(7, 2, 3, 100 + s);
        CHECK(treewidth_exact(g).width == treewidth_by_all_orders(g));
    }
}

TEST_CASE("treewidth witnesses validate at the reported width") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = twctest::random_graph(8, 1, 2, 50 + s);
        TreewidthResult res = treewidth_exact(g);
        ValidationReport r = validate_decomposition(g, res.decomposition);
        CHECK(r.valid);
        CHECK(r.width == res.width);
    }
    // Petersen is the classic width-4 instance
    TreewidthResult p = treewidth_exact(twctest::petersen());
    CHECK(p.width == 4);
    CHECK(validate_decomposition(twctest::petersen(), p.decomposition).valid);
}

TEST_CASE("treewidth corner cases and limits") {
    CHECK(treewidth_exact(build_graph(1, {})).width == 0);
    CHECK(treewidth_exact(build_graph(4, {})).width == 0);
    CHECK(treewidth_exact(build_graph(2, {{0, 1}})).width == 1);
    CHECK_THROWS_WITH_AS(treewidth_exact(complete_graph(22), 21), doctest::Contains("TooLarge"),
                         Error);

    TreewidthBounds b = treewidth_bounds(twctest::petersen());
    CHECK(b.lower <= 4);
    CHECK(b.upper >= 4);
    CHECK(b.lower >= 1);
}

TEST_CASE("degeneracy never exceeds treewidth") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        Graph g = twctest::random_graph(8, 2, 5, 200 + s);
        CHECK(degeneracy(g).k <= treewidth_exact(g).width);
    }
}

TEST_CASE("smoothing yields uniform bags with unit overlap steps") {
    Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    TreeDecomposition td = smooth(triangle, path_of_bags({{0, 1, 2}, {1, 2}}));
    CHECK(td.nodes.size() == 1);
    CHECK(validate_decomposition(triangle, td).smooth);

    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    td = smooth(p4, path_of_bags({{0, 1}, {1, 2}, {2, 3}}));
    ValidationReport r = validate_decomposition(p4, td);
    CHECK(r.valid);
    CHECK(r.smooth);
    CHECK(r.width == 1);
    CHECK(td.nodes.size() == 3);

    // K_4 plus a pendant vertex: bags of unequal size must be padded
    Graph k4p = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    td = smooth(k4p, path_of_bags({{0, 1, 2, 3}, {0, 4}}));
    r = validate_decomposition(k4p, td);
    CHECK(r.valid);
    CHECK(r.smooth);
    CHECK(r.width == 3);
    CHECK(td.nodes.size() == 2);
}

TEST_CASE("smoothing random partial k-trees keeps width and hits n-k bags") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        Graph g = random_partial_ktree(11, 3, Rational(4, 5), 900 + s);
        TreewidthResult res = treewidth_exact(g);
        if (g.vertex_count() == res.width) continue;  // complete graph, single bag
        TreeDecomposition sm = smooth(g, res.decomposition);
        ValidationReport r = validate_decomposition(g, sm);
        CHECK(r.valid);
        CHECK(r.smooth);
        CHECK(r.width == res.width);
        CHECK(static_cast<int>(sm.nodes.size()) == g.vertex_count() - res.width);
    }
}

TEST_CASE("smooth rejects invalid input") {
    Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(smooth(triangle, path_of_bags({{0, 1}, {1, 2}})), Error);
}

TEST_CASE("subtree_of_vertex returns the bag nodes holding the vertex") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    TreeDecomposition td = path_of_bags({{0, 1}, {1, 2}, {2, 3}});
    RootedTree t = subtree_of_vertex(td, 1);
    CHECK(t.nodes.size() == 2);
    RootedTree single = subtree_of_vertex(path_of_bags({{0, 1, 2}}), 2);
    CHECK(single.nodes.size() == 1);
    CHECK_THROWS_WITH_AS(subtree_of_vertex(td, 9), doctest::Contains("UnknownVertex"), Error);
}

TEST_CASE("smooth decompositions bound degrees via subtree sizes") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        Graph g = random_partial_ktree(10, 3, Rational(1), 300 + s);
        TreewidthResult res = treewidth_exact(g);
        TreeDecomposition sm = smooth(g, res.decomposition);
        for (int v = 0; v < g.vertex_count(); ++v) {
            RootedTree t = subtree_of_vertex(sm, v);
            CHECK(g.degree(v) <= static_cast<int>(t.nodes.size()) + res.width - 1);
        }
    }
}

TEST_CASE("leaving_vertex is the unique bag difference") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    TreeDecomposition td = path_of_bags({{0, 1}, {1, 2}, {2, 3}});
    CHECK(leaving_vertex(td, 0, 1) == 0);
    CHECK(leaving_vertex(td, 1, 0) == 2);
    CHECK(leaving_vertex(td, 2, 1) == 3);
    CHECK_THROWS_WITH_AS(leaving_vertex(td, 0, 2), doctest::Contains("NotTreeEdge"), Error);

    TreeDecomposition rough = path_of_bags({{0, 1, 2}, {2, 3}});
    CHECK_THROWS_WITH_AS(leaving_vertex(rough, 0, 1), doctest::Contains("NotSmooth"), Error);

    // every oriented edge of a smooth decomposition leaves exactly one vertex
    for (std::uint64_t s = 0; s < 6; ++s) {
        Graph g = random_partial_ktree(9, 2, Rational(9, 10), 400 + s);
        TreewidthResult res = treewidth_exact(g);
        if (g.vertex_count() == res.width) continue;
        TreeDecomposition sm = smooth(g, res.decomposition);
        for (auto [a, b] : sm.tree_edges) {
            int va = leaving_vertex(sm, a, b);
            int vb = leaving_vertex(sm, b, a);
            CHECK(va != vb);
        }
    }
}

TEST_CASE("tree lemma sums match hand-computed values") {
    // star on 4 nodes, center 0
    RootedTree star = make_tree(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(tree_lemma1_sum(star, 2) == 3);
    // path 0-1-2-3
    RootedTree p4 = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(tree_lemma1_sum(p4, 2) == 2);
    // path on 3 nodes at d = |T|
    RootedTree p3 = make_tree(3, {{0, 1}, {1, 2}});
    CHECK(tree_lemma1_sum(p3, 3) == 6);
    CHECK_THROWS_WITH_AS(tree_lemma1_sum(p3, 0), doctest::Contains("BadD"), Error);
    CHECK_THROWS_WITH_AS(tree_lemma1_sum(p3, 4), doctest::Contains("BadD"), Error);
}

TEST_CASE("tree lemma 2 boundary cases") {
    RootedTree p4 = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(tree_lemma2_lhs(p4, {0, 1, 2, 3}, 2) == 0);  // empty boundary
    // T* = {1}: the components holding 1 have sizes 3 and 2, so the sum is
    // [3-3] + [3-2] = 1, within the bound [3-1] = 2
    CHECK(tree_lemma2_lhs(p4, {1}, 3) == 1);
    CHECK(tree_lemma2_lhs(p4, {0, 1, 2}, 4) == 1);  // d = |T| gives |T| - |T*|
    CHECK(tree_lemma2_lhs(p4, {1}, 4) == 3);
    CHECK_THROWS_WITH_AS(tree_lemma2_lhs(p4, {0, 2}, 2), doctest::Contains("NotASubtree"), Error);
}

TEST_CASE("json round trip preserves decompositions") {
    Graph g = twctest::cycle(6);
    TreewidthResult res = treewidth_exact(g);
    std::string text = decomposition_to_json(res.decomposition);
    TreeDecomposition back = decomposition_from_json(text);
    CHECK(back.nodes == res.decomposition.nodes);
    CHECK(back.tree_edges == res.decomposition.tree_edges);
    CHECK(back.bags == res.decomposition.bags);
    CHECK_THROWS_AS(decomposition_from_json("{"), Error);
    CHECK_THROWS_AS(decomposition_from_json("[1,2]"), Error);
}

#include "twcolor/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include <json.hpp>

namespace twc {

namespace {

using Json = nlohmann::json;

// Node-indexed adjacency for the decomposition tree.
std::map<int, std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
    std::map<int, std::vector<int>> adj;
    for (int t : td.nodes) adj[t];
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [t, nb] : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

bool connected_in_tree(const std::map<int, std::vector<int>>& adj, const std::set<int>& keep) {
    if (keep.empty()) return false;
    std::set<int> seen;
    std::queue<int> q;
    q.push(*keep.begin());
    seen.insert(*keep.begin());
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (int u : adj.at(t))
            if (keep.count(u) && !seen.count(u)) {
                seen.insert(u);
                q.push(u);
            }
    }
    return seen.size() == keep.size();
}

bool bag_contains(const std::vector<int>& bag, int v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

// Structural smoothness alone: all bags of size width+1 and adjacent bags
// sharing exactly width vertices.  Validity with respect to a host graph
// is a separate question.
bool smooth_shape(const TreeDecomposition& td, int width) {
    for (const auto& [t, bag] : td.bags)
        if (static_cast<int>(bag.size()) != width + 1) return false;
    for (auto [a, b] : td.tree_edges)
        if (static_cast<int>(intersection_size(td.bags.at(a), td.bags.at(b))) != width) return false;
    return true;
}

ValidationReport fail(const std::string& reason) {
    ValidationReport r;
    r.valid = false;
    r.reason = reason;
    return r;
}

} // namespace

ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    if (td.nodes.empty()) return fail("decomposition has no nodes");
    std::set<int> nodeset(td.nodes.begin(), td.nodes.end());
    if (nodeset.size() != td.nodes.size()) return fail("duplicate node ids");
    if (td.bags.size() != td.nodes.size()) return fail("bag count differs from node count");
    for (int t : td.nodes)
        if (!td.bags.count(t)) return fail("node " + std::to_string(t) + " has no bag");

    int n = g.vertex_count();
    for (const auto& [t, bag] : td.bags) {
        for (int v : bag)
            if (v < 0 || v >= n)
                throw Error(ErrorKind::BagVertexOutOfRange,
                            "bag " + std::to_string(t) + " mentions unknown vertex " +
                                std::to_string(v));
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            return fail("bag " + std::to_string(t) + " is not sorted and duplicate-free");
    }

    for (auto [a, b] : td.tree_edges) {
        if (!nodeset.count(a) || !nodeset.count(b))
            return fail("tree edge joins unknown node");
        if (a == b) return fail("tree edge is a loop");
    }
    if (td.tree_edges.size() + 1 != td.nodes.size())
        return fail("wrong tree edge count for a tree");
    auto adj = tree_adjacency(td);
    if (!connected_in_tree(adj, nodeset)) return fail("decomposition tree is disconnected");

    // (i) every vertex in some bag
    std::vector<char> covered(n, 0);
    for (const auto& [t, bag] : td.bags)
        for (int v : bag) covered[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) return fail("vertex " + std::to_string(v) + " is in no bag");

    // (ii) every edge inside some bag
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& [t, bag] : td.bags)
            if (bag_contains(bag, u) && bag_contains(bag, v)) {
                ok = true;
                break;
            }
        if (!ok)
            return fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is in no bag");
    }

    // (iii) the nodes holding each vertex form a subtree
    for (int v = 0; v < n; ++v) {
        std::set<int> holds;
        for (const auto& [t, bag] : td.bags)
            if (bag_contains(bag, v)) holds.insert(t);
        if (!connected_in_tree(adj, holds))
            return fail("occurrences of vertex " + std::to_string(v) + " are disconnected");
    }

    ValidationReport r;
    r.valid = true;
    size_t maxbag = 0;
    for (const auto& [t, bag] : td.bags) maxbag = std::max(maxbag, bag.size());
    r.width = static_cast<int>(maxbag) - 1;
    r.smooth = smooth_shape(td, r.width);
    return r;
}

RootedTree subtree_of_vertex(const TreeDecomposition& td, int v) {
    std::set<int> holds;
    for (const auto& [t, bag] : td.bags)
        if (bag_contains(bag, v)) holds.insert(t);
    if (holds.empty())
        throw Error(ErrorKind::UnknownVertex,
                    "vertex " + std::to_string(v) + " appears in no bag");
    auto adj = tree_adjacency(td);
    if (!connected_in_tree(adj, holds))
        throw Error(ErrorKind::InvalidInput,
                    "occurrences of vertex " + std::to_string(v) + " are disconnected");

    RootedTree t;
    t.nodes.assign(holds.begin(), holds.end());
    t.root = t.nodes.front();
    std::queue<int> q;
    std::set<int> seen{t.root};
    q.push(t.root);
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int u : adj.at(s))
            if (holds.count(u) && !seen.count(u)) {
                seen.insert(u);
                t.parent[u] = s;
                q.push(u);
            }
    }
    return t;
}

int leaving_vertex(const TreeDecomposition& td, int s, int t) {
    bool is_edge = false;
    for (auto [a, b] : td.tree_edges)
        if ((a == s && b == t) || (a == t && b == s)) {
            is_edge = true;
            break;
        }
    if (!is_edge)
        throw Error(ErrorKind::NotTreeEdge,
                    "(" + std::to_string(s) + "," + std::to_string(t) + ") is not a tree edge");

    size_t maxbag = 0;
    for (const auto& [node, bag] : td.bags) maxbag = std::max(maxbag, bag.size());
    if (!smooth_shape(td, static_cast<int>(maxbag) - 1))
        throw Error(ErrorKind::NotSmooth, "leaving_vertex needs a smooth decomposition");

    const auto& bs = td.bags.at(s);
    const auto& bt = td.bags.at(t);
    std::vector<int> diff;
    std::set_difference(bs.begin(), bs.end(), bt.begin(), bt.end(), std::back_inserter(diff));
    if (diff.size() != 1)
        throw Error(ErrorKind::NotSmooth, "bag difference along a smooth edge must be a single vertex");
    return diff.front();
}

namespace {

// Subtree sizes from the root; also validates that parent links describe
// one tree spanning all nodes.
std::map<int, long long> subtree_sizes(const RootedTree& t,
                                       std::map<int, std::vector<int>>& children) {
    for (int v : t.nodes) children[v];
    int roots = 0;
    for (int v : t.nodes) {
        auto it = t.parent.find(v);
        if (it == t.parent.end()) {
            ++roots;
            continue;
        }
        if (!children.count(it->second))
            throw Error(ErrorKind::InvalidInput, "parent link leaves the node set");
        children[it->second].push_back(v);
    }
    if (roots != 1 || t.parent.count(t.root))
        throw Error(ErrorKind::InvalidInput, "tree must have exactly one root");

    std::map<int, long long> size;
    // iterative post-order
    std::vector<std::pair<int, bool>> stack{{t.root, false}};
    long long visited = 0;
    while (!stack.empty()) {
        auto [v, done] = stack.back();
        stack.pop_back();
        if (done) {
            long long s = 1;
            for (int c : children[v]) s += size[c];
            size[v] = s;
            ++visited;
        } else {
            stack.emplace_back(v, true);
            for (int c : children[v]) stack.emplace_back(c, false);
        }
    }
    if (visited != static_cast<long long>(t.nodes.size()))
        throw Error(ErrorKind::InvalidInput, "parent links contain a cycle or disconnect");
    return size;
}

} // namespace

long long tree_lemma1_sum(const RootedTree& t, int d) {
    long long total = static_cast<long long>(t.nodes.size());
    if (d < 1 || d > total)
        throw Error(ErrorKind::BadD, "d must lie in 1..|T|");
    std::map<int, std::vector<int>> children;
    auto size = subtree_sizes(t, children);
    long long sum = 0;
    for (const auto& [v, p] : t.parent) {
        long long below = size[v];          // component of v when edge (v,p) is cut
        sum += positive_part(d - below);            // orientation (v -> p)
        sum += positive_part(d - (total - below));  // orientation (p -> v)
    }
    return sum;
}

long long tree_lemma2_lhs(const RootedTree& t, const std::vector<int>& tstar, int d) {
    long long total = static_cast<long long>(t.nodes.size());
    if (d < 1 || d > total)
        throw Error(ErrorKind::BadD, "d must lie in 1..|T|");
    std::set<int> inside(tstar.begin(), tstar.end());
    if (inside.empty())
        throw Error(ErrorKind::NotASubtree, "tstar is empty");
    std::set<int> nodeset(t.nodes.begin(), t.nodes.end());
    for (int v : inside)
        if (!nodeset.count(v))
            throw Error(ErrorKind::NotASubtree, "tstar mentions unknown node");

    std::map<int, std::vector<int>> adj;
    for (int v : t.nodes) adj[v];
    for (const auto& [v, p] : t.parent) {
        adj[v].push_back(p);
        adj[p].push_back(v);
    }
    if (!connected_in_tree(adj, inside))
        throw Error(ErrorKind::NotASubtree, "tstar is not connected");

    std::map<int, std::vector<int>> children;
    auto size = subtree_sizes(t, children);
    long long sum = 0;
    for (const auto& [v, p] : t.parent) {
        bool v_in = inside.count(v) > 0;
        bool p_in = inside.count(p) > 0;
        if (v_in == p_in) continue;
        // the oriented edge leaving tstar
        long long inside_side = v_in ? size[v] : total - size[v];
        sum += positive_part(d - inside_side);
    }
    return sum;
}

std::string decomposition_to_json(const TreeDecomposition& td) {
    Json j;
    j["nodes"] = td.nodes;
    Json edges = Json::array();
    for (auto [a, b] : td.tree_edges) edges.push_back(Json::array({a, b}));
    j["tree_edges"] = edges;
    Json bags = Json::object();
    for (const auto& [t, bag] : td.bags) bags[std::to_string(t)] = bag;
    j["bags"] = bags;
    return j.dump(2);
}

TreeDecomposition decomposition_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    TreeDecomposition td;
    try {
        if (!j.is_object() || !j.contains("nodes") || !j.contains("tree_edges") ||
            !j.contains("bags"))
            throw Error(ErrorKind::ParseError,
                        "decomposition JSON needs nodes, tree_edges and bags");
        td.nodes = j.at("nodes").get<std::vector<int>>();
        for (const auto& e : j.at("tree_edges")) {
            auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2)
                throw Error(ErrorKind::ParseError, "tree edge must have two endpoints");
            td.tree_edges.emplace_back(pair[0], pair[1]);
        }
        for (const auto& [key, bag] : j.at("bags").items()) {
            size_t used = 0;
            int t = std::stoi(key, &used);
            if (used != key.size())
                throw Error(ErrorKind::ParseError, "bag key is not a node id: " + key);
            auto vs = bag.get<std::vector<int>>();
            std::sort(vs.begin(), vs.end());
            td.bags[t] = std::move(vs);
        }
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "bag key is not a node id");
    }
    std::sort(td.nodes.begin(), td.nodes.end());
    return td;
}

} // namespace twc

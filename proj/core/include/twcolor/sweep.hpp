#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twcolor/graph.hpp"
#include "twcolor/rational.hpp"

namespace twc {

// The five statements a sweep can test on every corpus graph, each a
// hypothesis about treewidth k and maximum degree delta plus a checkable
// conclusion:
//   edge_bound:           delta >= k            =>  2|E| <= delta*n - (delta-k)(delta-k+1)
//   not_overfull:         (delta-k)^2 >= k >= 0, delta >= k  =>  g is not overfull
//   fractional_class_one: same hypothesis       =>  chi'_f(g) = delta exactly
//   class_one:            same hypothesis       =>  chi'(g) = delta
//   high_degree_class_one: k >= 4, delta >= 2k-1 =>  chi'(g) = delta
enum class Statement {
    edge_bound,
    not_overfull,
    fractional_class_one,
    class_one,
    high_degree_class_one,
};

const char* statement_name(Statement s);
std::optional<Statement> statement_from_name(const std::string& name);
std::vector<Statement> all_statements();

// Per-solver size caps; a graph beyond a needed cap counts as
// not_applicable for the statements that needed it.
struct SweepLimits {
    int treewidth_n = 20;
    int chi_edges = 60;
    int fractional_n = 18;
};

struct StatementCounts {
    long long checked = 0;  // hypothesis held and conclusion was decided
    long long passed = 0;
    long long failed = 0;
    long long not_applicable = 0;
};

enum class Verdict { pass, fail, not_applicable };

const char* verdict_name(Verdict v);

// Measures shared by the statement evaluations; fields are empty when the
// corresponding cap was exceeded.
struct GraphFacts {
    int n = 0;
    int m = 0;
    int delta = 0;
    bool overfull = false;
    std::optional<int> treewidth;
    std::optional<int> chi_prime;
    std::optional<Rational> fractional;
};

// Computes only the measures the requested statements can need: treewidth
// always (every hypothesis mentions it), chi'/chi'_f lazily once some
// requested hypothesis holds.
GraphFacts gather_facts(const Graph& g, const std::vector<Statement>& statements,
                        const SweepLimits& limits);

Verdict evaluate_statement(const GraphFacts& facts, Statement s);

struct SweepResult {
    long long graphs_seen = 0;
    std::map<Statement, StatementCounts> counts;
    // first failing graph per statement, in corpus order
    std::map<Statement, Graph> counterexamples;

    bool any_failure() const;
};

// One representative of every isomorphism class on 1..n_max vertices.
SweepResult sweep_exhaustive(int n_max, const std::vector<Statement>& statements,
                             const SweepLimits& limits);

// `count` draws from random_partial_ktree(n, k, keep, seed + i).
SweepResult sweep_ktree(int n, int k, const Rational& keep, int count, std::uint64_t seed,
                        const std::vector<Statement>& statements, const SweepLimits& limits);

} // namespace twc

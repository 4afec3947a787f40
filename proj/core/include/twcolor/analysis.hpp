#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twcolor/bounds.hpp"
#include "twcolor/coloring.hpp"
#include "twcolor/graph.hpp"
#include "twcolor/rational.hpp"
#include "twcolor/sweep.hpp"

namespace twc {

// Everything the analyze command reports about one graph.  Optional
// fields are empty when their solver cap was exceeded; the JSON emitter
// renders those as "skipped".
struct AnalysisReport {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int degeneracy = 0;

    std::optional<int> treewidth;  // exact; otherwise [lo, hi] below
    int treewidth_lo = 0;
    int treewidth_hi = 0;

    std::optional<int> chi_prime;   // exact value or Vizing upper bound
    std::string chi_prime_method;   // "exact" | "vizing_upper" | "skipped"
    std::optional<Rational> chi_prime_fractional;

    bool overfull = false;
    bool overfull_search_ran = false;
    std::optional<std::vector<int>> overfull_subgraph;

    // treewidth-model report is absent when max_degree < k (its hypothesis)
    std::optional<BoundReport> bound_treewidth;
    BoundReport bound_rose;
    BoundReport bound_degenerate;

    std::vector<Violation> critical_certificates;
    std::map<Statement, Verdict> verdicts;
};

AnalysisReport analyze_graph(const Graph& g, const SweepLimits& limits = {});

// Schema-versioned JSON rendering ("schema": 1), deterministic field and
// element order, two-space indentation.
std::string analysis_report_json(const AnalysisReport& report);

} // namespace twc

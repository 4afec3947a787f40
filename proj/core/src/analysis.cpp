#include "twcolor/analysis.hpp"

#include <json.hpp>

#include "twcolor/fractional.hpp"
#include "twcolor/treewidth.hpp"

namespace twc {

AnalysisReport analyze_graph(const Graph& g, const SweepLimits& limits) {
    AnalysisReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.max_degree = g.max_degree();
    r.degeneracy = twc::degeneracy(g).k;

    if (r.n <= limits.treewidth_n) {
        r.treewidth = treewidth_exact(g, limits.treewidth_n).width;
        r.treewidth_lo = r.treewidth_hi = *r.treewidth;
    } else {
        TreewidthBounds b = treewidth_bounds(g);
        r.treewidth_lo = b.lower;
        r.treewidth_hi = b.upper;
        if (b.lower == b.upper) r.treewidth = b.lower;  // bounds met, so exact
    }

    if (r.m <= limits.chi_edges) {
        r.chi_prime = chi_prime_exact(g, limits.chi_edges);
        r.chi_prime_method = "exact";
    } else if (r.max_degree <= 62) {
        r.chi_prime = vizing_color(g).colors;
        r.chi_prime_method = "vizing_upper";
    } else {
        r.chi_prime_method = "skipped";
    }

    if (r.n <= limits.fractional_n)
        r.chi_prime_fractional = fractional_chi_prime(g, limits.fractional_n).value;

    r.overfull = is_overfull(g);
    if (r.n <= 18) {
        r.overfull_search_ran = true;
        r.overfull_subgraph = find_overfull_subgraph(g);
    }

    // the treewidth and rose models take the certified width (exact when
    // known, greedy upper bound otherwise); the degenerate model always
    // has its exact parameter
    const int k_width = r.treewidth ? *r.treewidth : r.treewidth_hi;
    if (r.max_degree >= k_width)
        r.bound_treewidth = check_edge_bound(g, k_width, BoundModel::treewidth);
    r.bound_rose = check_edge_bound(g, k_width, BoundModel::rose);
    r.bound_degenerate = check_edge_bound(g, r.degeneracy, BoundModel::degenerate);

    r.critical_certificates = criticality_certificates(g);

    GraphFacts facts;
    facts.n = r.n;
    facts.m = r.m;
    facts.delta = r.max_degree;
    facts.overfull = r.overfull;
    facts.treewidth = r.treewidth;
    if (r.chi_prime_method == "exact") facts.chi_prime = r.chi_prime;
    facts.fractional = r.chi_prime_fractional;
    for (Statement s : all_statements()) r.verdicts[s] = evaluate_statement(facts, s);
    return r;
}

namespace {

nlohmann::ordered_json bound_json(const BoundReport& b) {
    return {{"model", bound_model_name(b.model)}, {"n", b.n},
            {"delta", b.delta},                   {"k", b.k},
            {"rhs", b.rhs},                       {"actual", b.actual},
            {"satisfied", b.satisfied},           {"tight", b.tight}};
}

} // namespace

std::string analysis_report_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["m"] = r.m;
    j["max_degree"] = r.max_degree;
    j["degeneracy"] = r.degeneracy;
    if (r.treewidth)
        j["treewidth"] = *r.treewidth;
    else
        j["treewidth"] = {r.treewidth_lo, r.treewidth_hi};
    if (r.chi_prime)
        j["chi_prime"] = *r.chi_prime;
    else
        j["chi_prime"] = "skipped";
    j["chi_prime_method"] = r.chi_prime_method;
    if (r.chi_prime_fractional)
        j["chi_prime_fractional"] = {{"num", r.chi_prime_fractional->num()},
                                     {"den", r.chi_prime_fractional->den()}};
    else
        j["chi_prime_fractional"] = "skipped";
    j["overfull"] = r.overfull;
    if (!r.overfull_search_ran)
        j["overfull_subgraph"] = "skipped";
    else if (r.overfull_subgraph)
        j["overfull_subgraph"] = *r.overfull_subgraph;
    else
        j["overfull_subgraph"] = nullptr;
    j["bounds"]["treewidth"] =
        r.bound_treewidth ? bound_json(*r.bound_treewidth) : nlohmann::ordered_json("not_applicable");
    j["bounds"]["rose"] = bound_json(r.bound_rose);
    j["bounds"]["degenerate"] = bound_json(r.bound_degenerate);
    j["critical_certificates"] = nlohmann::ordered_json::array();
    for (const Violation& v : r.critical_certificates)
        j["critical_certificates"].push_back(
            {{"lemma", adjacency_lemma_name(v.lemma)}, {"vertices", v.vertices}});
    for (const auto& [s, verdict] : r.verdicts)
        j["verdicts"][statement_name(s)] = verdict_name(verdict);
    return j.dump(2) + "\n";
}

} // namespace twc

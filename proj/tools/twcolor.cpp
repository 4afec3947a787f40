// twcolor: analyze graphs, build the extremal families, realize degree
// sequences, compute tree decompositions, and sweep corpora against the
// library's edge-coloring statements.
//
// Exit codes: 0 success, 1 domain verdict against the input (non-graphic
// sequence, failed validation, sweep counterexample), 2 usage or parse
// errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twcolor/analysis.hpp"
#include "twcolor/constructions.hpp"
#include "twcolor/enumerate.hpp"
#include "twcolor/fractional.hpp"
#include "twcolor/graph_io.hpp"
#include "twcolor/sweep.hpp"
#include "twcolor/treewidth.hpp"

namespace {

struct GlobalOpts {
    twc::SweepLimits limits;
    std::uint64_t seed = 1;
    bool json = false;
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    if (!out) throw twc::Error(twc::ErrorKind::ParseError, "cannot write " + path);
}

nlohmann::ordered_json sweep_json(const twc::SweepResult& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["graphs_seen"] = r.graphs_seen;
    for (const auto& [s, c] : r.counts)
        j["statements"][twc::statement_name(s)] = {{"checked", c.checked},
                                                   {"passed", c.passed},
                                                   {"failed", c.failed},
                                                   {"not_applicable", c.not_applicable}};
    return j;
}

int run_analyze(const std::string& path, const GlobalOpts& g) {
    twc::Graph graph = twc::read_edge_list_file(path);
    std::cout << twc::analysis_report_json(twc::analyze_graph(graph, g.limits));
    return 0;
}

int run_realize(const std::vector<int>& degrees, const std::string& out_path,
                const GlobalOpts& g) {
    std::vector<int> d = degrees;
    std::sort(d.rbegin(), d.rend());
    if (auto l = twc::erdos_gallai_failure(d)) {
        if (g.json) {
            nlohmann::ordered_json j{{"schema", 1}, {"graphic", false}};
            if (*l == 0)
                j["reason"] = "odd degree sum";
            else
                j["failing_l"] = *l;
            std::cout << j.dump(2) << "\n";
        } else if (*l == 0) {
            std::cout << "not graphic: odd degree sum\n";
        } else {
            std::cout << "not graphic: degree-sum inequality fails at l = " << *l << "\n";
        }
        return 1;
    }
    twc::Graph graph = twc::havel_hakimi_realize(d);
    if (out_path.empty())
        twc::write_edge_list(std::cout, graph);
    else
        twc::write_edge_list_file(out_path, graph);
    return 0;
}

// Shared tail of every construct sub-family: self-check via analyze, then
// write PREFIX.el and a PREFIX.json sidecar with the full report.
int emit_construction(const twc::Graph& graph, const std::string& prefix,
                      nlohmann::ordered_json params, const GlobalOpts& g) {
    twc::AnalysisReport report = twc::analyze_graph(graph, g.limits);
    nlohmann::ordered_json sidecar;
    sidecar["schema"] = 1;
    sidecar["params"] = std::move(params);
    sidecar["degree_sequence"] = graph.degree_sequence();
    sidecar["report"] = nlohmann::ordered_json::parse(twc::analysis_report_json(report));
    std::ostringstream el;
    twc::write_edge_list(el, graph);
    write_text_file(prefix + ".el", el.str());
    write_text_file(prefix + ".json", sidecar.dump(2) + "\n");
    std::cout << prefix << ".el and " << prefix << ".json written (n=" << graph.vertex_count()
              << ", m=" << graph.edge_count() << ")\n";
    return 0;
}

int run_decompose(const std::string& path, bool smooth_flag, const std::string& validate_path,
                  const GlobalOpts& g) {
    twc::Graph graph = twc::read_edge_list_file(path);
    if (!validate_path.empty()) {
        std::ifstream in(validate_path);
        if (!in) throw twc::Error(twc::ErrorKind::ParseError, "cannot read " + validate_path);
        std::stringstream buf;
        buf << in.rdbuf();
        twc::TreeDecomposition td = twc::decomposition_from_json(buf.str());
        twc::ValidationReport v = twc::validate_decomposition(graph, td);
        if (g.json) {
            nlohmann::ordered_json j{{"schema", 1},
                                     {"valid", v.valid},
                                     {"width", v.width},
                                     {"smooth", v.smooth}};
            if (!v.valid) j["reason"] = v.reason;
            std::cout << j.dump(2) << "\n";
        } else if (v.valid) {
            std::cout << "valid, width " << v.width << (v.smooth ? ", smooth" : ", not smooth")
                      << "\n";
        } else {
            std::cout << "invalid: " << v.reason << "\n";
        }
        return v.valid ? 0 : 1;
    }
    twc::TreewidthResult res = twc::treewidth_exact(graph, g.limits.treewidth_n);
    twc::TreeDecomposition td = res.decomposition;
    if (smooth_flag && graph.vertex_count() > res.width)
        td = twc::smooth(graph, td);
    std::cout << twc::decomposition_to_json(td) << "\n";
    return 0;
}

int run_sweep(const twc::SweepResult& result, const GlobalOpts& g) {
    if (g.json) {
        std::cout << sweep_json(result).dump(2) << "\n";
    } else {
        std::cout << "graphs: " << result.graphs_seen << "\n";
        for (const auto& [s, c] : result.counts)
            std::cout << twc::statement_name(s) << ": checked " << c.checked << ", passed "
                      << c.passed << ", failed " << c.failed << ", not applicable "
                      << c.not_applicable << "\n";
    }
    for (const auto& [s, graph] : result.counterexamples) {
        std::string file = std::string("counterexample_") + twc::statement_name(s) + ".el";
        std::ostringstream el;
        twc::write_edge_list(el, graph);
        write_text_file(file, el.str());
        std::cerr << "counterexample for " << twc::statement_name(s) << " written to " << file
                  << "\n";
    }
    return result.any_failure() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"treewidth, edge-coloring bounds, and extremal constructions"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--limit-treewidth", g.limits.treewidth_n,
                   "largest n for the exact treewidth solver");
    app.add_option("--limit-chi", g.limits.chi_edges,
                   "largest edge count for the exact chromatic index solver");
    app.add_option("--limit-fractional", g.limits.fractional_n,
                   "largest n for the exact fractional index solver");
    app.add_option("--seed", g.seed, "PRNG seed for randomized corpora");
    app.add_flag("--json", g.json, "machine-readable output where applicable");

    auto* analyze = app.add_subcommand("analyze", "full report for one edge-list graph");
    std::string analyze_path;
    analyze->add_option("graph", analyze_path, "edge-list file")->required();

    auto* construct = app.add_subcommand("construct", "build one of the extremal families");
    construct->require_subcommand(1);
    std::string out_prefix;
    construct->add_option("--out", out_prefix, "output prefix (default: family_params)");

    auto* apex = construct->add_subcommand("apex", "clique plus independent apex vertices");
    int apex_k = 0, apex_r = 0;
    apex->add_option("--k", apex_k, "clique size")->required();
    apex->add_option("--r", apex_r, "apex vertex count")->required();

    auto* tight = construct->add_subcommand("tight", "edge-maximal graph of given treewidth");
    int tight_k = 0, tight_delta = 0, tight_k0 = 0, tight_n = 0;
    tight->add_option("--k", tight_k, "treewidth (with --delta)");
    tight->add_option("--delta", tight_delta, "maximum degree (with --k)");
    tight->add_option("--k0", tight_k0, "derive k >= k0 with delta = k + floor(sqrt(k))");
    tight->add_option("--n", tight_n, "vertex count")->required();

    auto* stars = construct->add_subcommand("stars", "complement of a disjoint star forest");
    int stars_p = 0;
    stars->add_option("--p", stars_p, "number of stars")->required();

    auto* ktree = construct->add_subcommand("ktree", "random partial k-tree");
    int ktree_n = 0, ktree_k = 0;
    std::string ktree_keep = "1";
    ktree->add_option("--n", ktree_n, "vertex count")->required();
    ktree->add_option("--k", ktree_k, "backbone width")->required();
    ktree->add_option("--keep", ktree_keep, "edge keep probability, e.g. 3/4");

    // lets --out appear after the family name: construct apex --k 5 --r 2 --out x
    for (auto* family : {apex, tight, stars, ktree}) family->fallthrough();

    auto* realize = app.add_subcommand("realize", "realize a degree sequence, if graphic");
    std::vector<int> realize_degrees;
    std::string realize_out;
    realize->add_option("degrees", realize_degrees, "degree sequence")->required();
    realize->add_option("--out", realize_out, "write edge list here instead of stdout");

    auto* decompose = app.add_subcommand("decompose", "exact-width tree decomposition as JSON");
    std::string decompose_path, validate_path;
    bool smooth_flag = false;
    decompose->add_option("graph", decompose_path, "edge-list file")->required();
    decompose->add_flag("--smooth", smooth_flag, "emit the smoothed decomposition");
    decompose->add_option("--validate", validate_path,
                          "validate this decomposition JSON against the graph instead");

    auto* sweep = app.add_subcommand("sweep", "test the statements over a graph corpus");
    int sweep_exhaustive_n = 0, sweep_n = 0, sweep_k = 0, sweep_count = 0;
    std::string sweep_keep = "3/4";
    std::vector<std::string> sweep_statements;
    sweep->add_option("--exhaustive", sweep_exhaustive_n,
                      "every isomorphism class on 1..N vertices");
    sweep->add_option("--n", sweep_n, "partial k-tree vertex count");
    sweep->add_option("--k", sweep_k, "partial k-tree width");
    sweep->add_option("--keep", sweep_keep, "partial k-tree keep probability");
    sweep->add_option("--count", sweep_count, "number of sampled graphs");
    sweep->add_option("--statements", sweep_statements, "subset to test (default: all)")
        ->delimiter(',');

    // global options (--json, --seed, --limit-*) may follow the subcommand name
    for (auto* cmd : {analyze, construct, realize, decompose, sweep}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help/--version stay 0, usage errors are 2
    }

    auto parse_rational = [](const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return twc::Rational(std::stoll(text));
            return twc::Rational(std::stoll(text.substr(0, slash)),
                                 std::stoll(text.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw twc::Error(twc::ErrorKind::ParseError, "bad rational: " + text);
        }
    };

    try {
        if (*analyze) return run_analyze(analyze_path, g);
        if (*realize) return run_realize(realize_degrees, realize_out, g);
        if (*decompose) return run_decompose(decompose_path, smooth_flag, validate_path, g);
        if (*construct) {
            if (*apex) {
                std::string prefix = out_prefix.empty() ? "apex_" + std::to_string(apex_k) + "_" +
                                                              std::to_string(apex_r)
                                                        : out_prefix;
                return emit_construction(twc::construct_apex(apex_k, apex_r), prefix,
                                         {{"family", "apex"}, {"k", apex_k}, {"r", apex_r}}, g);
            }
            if (*stars) {
                std::string prefix =
                    out_prefix.empty() ? "stars_" + std::to_string(stars_p) : out_prefix;
                return emit_construction(twc::construct_stars_complement(stars_p), prefix,
                                         {{"family", "stars"}, {"p", stars_p}}, g);
            }
            if (*ktree) {
                twc::Rational keep = parse_rational(ktree_keep);
                std::string prefix = out_prefix.empty() ? "ktree_" + std::to_string(ktree_n) +
                                                              "_" + std::to_string(ktree_k)
                                                        : out_prefix;
                return emit_construction(
                    twc::random_partial_ktree(ktree_n, ktree_k, keep, g.seed), prefix,
                    {{"family", "ktree"},
                     {"n", ktree_n},
                     {"k", ktree_k},
                     {"keep", ktree_keep},
                     {"seed", g.seed}},
                    g);
            }
            twc::TightParams params = tight_k0 > 0
                                          ? twc::tight_params_from_k0(tight_k0, tight_n)
                                          : twc::tight_params(tight_k, tight_delta, tight_n);
            twc::TightConstruction c = twc::construct_tight(params);
            std::string prefix = out_prefix.empty() ? "tight_" + std::to_string(params.k) + "_" +
                                                          std::to_string(params.delta) + "_" +
                                                          std::to_string(params.n)
                                                    : out_prefix;
            int rc = emit_construction(c.graph, prefix,
                                       {{"family", "tight"},
                                        {"k", params.k},
                                        {"delta", params.delta},
                                        {"c", params.c},
                                        {"r", params.r},
                                        {"n", params.n}},
                                       g);
            if (rc == 0)
                write_text_file(prefix + ".td.json", twc::decomposition_to_json(c.decomposition));
            return rc;
        }
        if (*sweep) {
            std::vector<twc::Statement> statements;
            if (sweep_statements.empty()) {
                statements = twc::all_statements();
            } else {
                for (const std::string& name : sweep_statements) {
                    auto s = twc::statement_from_name(name);
                    if (!s)
                        throw twc::Error(twc::ErrorKind::BadParams, "unknown statement " + name);
                    statements.push_back(*s);
                }
            }
            if (sweep_exhaustive_n > 0)
                return run_sweep(twc::sweep_exhaustive(sweep_exhaustive_n, statements, g.limits),
                                 g);
            if (sweep_n <= 0 || sweep_k <= 0 || sweep_count <= 0)
                throw twc::Error(twc::ErrorKind::BadParams,
                                 "sweep needs --exhaustive N or --n/--k/--count");
            return run_sweep(twc::sweep_ktree(sweep_n, sweep_k, parse_rational(sweep_keep),
                                              sweep_count, g.seed, statements, g.limits),
                             g);
        }
    } catch (const twc::Error& e) {
        std::cerr << "twcolor: " << e.what() << "\n";
        return e.kind() == twc::ErrorKind::NotGraphic ? 1 : 2;
    }
    return 2;
}

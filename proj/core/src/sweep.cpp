#include "twcolor/sweep.hpp"

#include <algorithm>

#include "twcolor/bounds.hpp"
#include "twcolor/coloring.hpp"
#include "twcolor/constructions.hpp"
#include "twcolor/enumerate.hpp"
#include "twcolor/fractional.hpp"
#include "twcolor/treewidth.hpp"

namespace twc {

const char* statement_name(Statement s) {
    switch (s) {
    case Statement::edge_bound: return "edge_bound";
    case Statement::not_overfull: return "not_overfull";
    case Statement::fractional_class_one: return "fractional_class_one";
    case Statement::class_one: return "class_one";
    case Statement::high_degree_class_one: return "high_degree_class_one";
    }
    return "unknown";
}

std::optional<Statement> statement_from_name(const std::string& name) {
    for (Statement s : all_statements())
        if (name == statement_name(s)) return s;
    return std::nullopt;
}

std::vector<Statement> all_statements() {
    return {Statement::edge_bound, Statement::not_overfull, Statement::fractional_class_one,
            Statement::class_one, Statement::high_degree_class_one};
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "unknown";
}

namespace {

// delta >= k and (delta - k)^2 >= k, the integer form of
// delta >= k + sqrt(k)
bool degree_gap_hypothesis(int delta, int k) {
    return delta >= k &&
           static_cast<long long>(delta - k) * (delta - k) >= static_cast<long long>(k);
}

bool needs_chi(Statement s) {
    return s == Statement::class_one || s == Statement::high_degree_class_one;
}

} // namespace

GraphFacts gather_facts(const Graph& g, const std::vector<Statement>& statements,
                        const SweepLimits& limits) {
    GraphFacts f;
    f.n = g.vertex_count();
    f.m = g.edge_count();
    f.delta = g.max_degree();
    f.overfull = is_overfull(g);
    if (f.n <= limits.treewidth_n) f.treewidth = treewidth_exact(g, limits.treewidth_n).width;
    if (!f.treewidth) return f;  // every hypothesis needs it
    const int k = *f.treewidth;

    bool want_chi = false, want_fractional = false;
    for (Statement s : statements) {
        if (needs_chi(s)) {
            if (s == Statement::class_one)
                want_chi = want_chi || degree_gap_hypothesis(f.delta, k);
            else
                want_chi = want_chi || (k >= 4 && f.delta >= 2 * k - 1);
        }
        if (s == Statement::fractional_class_one)
            want_fractional = degree_gap_hypothesis(f.delta, k);
    }
    if (want_chi && f.m <= limits.chi_edges) f.chi_prime = chi_prime_exact(g, limits.chi_edges);
    if (want_fractional && f.n <= limits.fractional_n)
        f.fractional = fractional_chi_prime(g, limits.fractional_n).value;
    return f;
}

Verdict evaluate_statement(const GraphFacts& facts, Statement s) {
    if (!facts.treewidth) return Verdict::not_applicable;
    const int k = *facts.treewidth;
    const int delta = facts.delta;
    switch (s) {
    case Statement::edge_bound: {
        if (delta < k) return Verdict::not_applicable;
        long long rhs = edge_bound_rhs(facts.n, delta, k, BoundModel::treewidth);
        return 2LL * facts.m <= rhs ? Verdict::pass : Verdict::fail;
    }
    case Statement::not_overfull:
        if (!degree_gap_hypothesis(delta, k)) return Verdict::not_applicable;
        return facts.overfull ? Verdict::fail : Verdict::pass;
    case Statement::fractional_class_one:
        if (!degree_gap_hypothesis(delta, k)) return Verdict::not_applicable;
        if (!facts.fractional) return Verdict::not_applicable;
        return *facts.fractional == Rational(delta) ? Verdict::pass : Verdict::fail;
    case Statement::class_one:
        if (!degree_gap_hypothesis(delta, k)) return Verdict::not_applicable;
        if (!facts.chi_prime) return Verdict::not_applicable;
        return *facts.chi_prime == delta ? Verdict::pass : Verdict::fail;
    case Statement::high_degree_class_one:
        if (!(k >= 4 && delta >= 2 * k - 1)) return Verdict::not_applicable;
        if (!facts.chi_prime) return Verdict::not_applicable;
        return *facts.chi_prime == delta ? Verdict::pass : Verdict::fail;
    }
    return Verdict::not_applicable;
}

bool SweepResult::any_failure() const {
    for (const auto& [s, c] : counts)
        if (c.failed > 0) return true;
    return false;
}

namespace {

void run_graph(const Graph& g, const std::vector<Statement>& statements,
               const SweepLimits& limits, SweepResult& out) {
    ++out.graphs_seen;
    GraphFacts facts = gather_facts(g, statements, limits);
    for (Statement s : statements) {
        StatementCounts& c = out.counts[s];
        switch (evaluate_statement(facts, s)) {
        case Verdict::pass:
            ++c.checked;
            ++c.passed;
            break;
        case Verdict::fail:
            ++c.checked;
            ++c.failed;
            out.counterexamples.emplace(s, g);
            break;
        case Verdict::not_applicable:
            ++c.not_applicable;
            break;
        }
    }
}

} // namespace

SweepResult sweep_exhaustive(int n_max, const std::vector<Statement>& statements,
                             const SweepLimits& limits) {
    if (n_max < 1) throw Error(ErrorKind::BadParams, "exhaustive sweep needs n_max >= 1");
    SweepResult out;
    for (Statement s : statements) out.counts[s];
    for (int n = 1; n <= n_max; ++n)
        for_each_graph(n, [&](const Graph& g) { run_graph(g, statements, limits, out); });
    return out;
}

SweepResult sweep_ktree(int n, int k, const Rational& keep, int count, std::uint64_t seed,
                        const std::vector<Statement>& statements, const SweepLimits& limits) {
    if (count < 1) throw Error(ErrorKind::BadParams, "sweep needs count >= 1");
    SweepResult out;
    for (Statement s : statements) out.counts[s];
    for (int i = 0; i < count; ++i) {
        Graph g = random_partial_ktree(n, k, keep, seed + static_cast<std::uint64_t>(i));
        run_graph(g, statements, limits, out);
    }
    return out;
}

} // namespace twc

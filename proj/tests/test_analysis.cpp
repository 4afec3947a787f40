#include <doctest.h>

#include <json.hpp>

#include "test_helpers.hpp"
#include "twcolor/analysis.hpp"
#include "twcolor/constructions.hpp"

using namespace twc;

TEST_CASE("full report on the apex graph") {
    AnalysisReport r = analyze_graph(construct_apex(5, 2));
    CHECK(r.n == 7);
    CHECK(r.m == 20);
    CHECK(r.max_degree == 6);
    CHECK(r.degeneracy == 5);
    CHECK(r.treewidth == 5);
    CHECK(r.chi_prime == 7);
    CHECK(r.chi_prime_method == "exact");
    CHECK(r.chi_prime_fractional == Rational(20, 3));
    CHECK(r.overfull);
    CHECK(r.overfull_search_ran);
    REQUIRE(r.overfull_subgraph.has_value());
    CHECK(r.overfull_subgraph->size() == 7);

    REQUIRE(r.bound_treewidth.has_value());
    CHECK(r.bound_treewidth->tight);
    CHECK(r.bound_treewidth->rhs == 40);
    CHECK(r.bound_rose.satisfied);
    CHECK(r.bound_degenerate.rhs == 41);
    CHECK_FALSE(r.bound_degenerate.tight);

    CHECK(r.critical_certificates.empty());

    // delta exceeds k by 1 < sqrt(5), so the gap statements do not apply
    CHECK(r.verdicts.at(Statement::edge_bound) == Verdict::pass);
    CHECK(r.verdicts.at(Statement::not_overfull) == Verdict::not_applicable);
    CHECK(r.verdicts.at(Statement::fractional_class_one) == Verdict::not_applicable);
    CHECK(r.verdicts.at(Statement::class_one) == Verdict::not_applicable);
    CHECK(r.verdicts.at(Statement::high_degree_class_one) == Verdict::not_applicable);
}

TEST_CASE("full report on the Petersen graph") {
    AnalysisReport r = analyze_graph(twctest::petersen());
    CHECK(r.n == 10);
    CHECK(r.m == 15);
    CHECK(r.max_degree == 3);
    CHECK(r.degeneracy == 3);
    CHECK(r.treewidth == 4);
    CHECK(r.chi_prime == 4);  // class two
    CHECK(r.chi_prime_fractional == Rational(3));
    CHECK_FALSE(r.overfull);
    CHECK_FALSE(r.overfull_subgraph.has_value());
    // delta < treewidth: the treewidth bound's hypothesis fails
    CHECK_FALSE(r.bound_treewidth.has_value());
    // regular graphs never trip the degree-counting conditions
    CHECK(r.critical_certificates.empty());
    CHECK(r.verdicts.at(Statement::edge_bound) == Verdict::not_applicable);
}

TEST_CASE("report JSON parses back with the advertised fields") {
    AnalysisReport r = analyze_graph(construct_apex(5, 2));
    nlohmann::json j = nlohmann::json::parse(analysis_report_json(r));
    CHECK(j["schema"] == 1);
    CHECK(j["n"] == 7);
    CHECK(j["m"] == 20);
    CHECK(j["max_degree"] == 6);
    CHECK(j["treewidth"] == 5);
    CHECK(j["chi_prime"] == 7);
    CHECK(j["chi_prime_method"] == "exact");
    CHECK(j["chi_prime_fractional"]["num"] == 20);
    CHECK(j["chi_prime_fractional"]["den"] == 3);
    CHECK(j["overfull"] == true);
    CHECK(j["bounds"]["treewidth"]["tight"] == true);
    CHECK(j["bounds"]["rose"]["rhs"] == 40);
    CHECK(j["verdicts"]["edge_bound"] == "pass");
    CHECK(j["verdicts"]["not_overfull"] == "not_applicable");

    // interval treewidth renders as a two-element array
    AnalysisReport big = analyze_graph(random_partial_ktree(24, 3, Rational(1, 2), 9));
    nlohmann::json jb = nlohmann::json::parse(analysis_report_json(big));
    if (!big.treewidth.has_value()) {
        REQUIRE(jb["treewidth"].is_array());
        CHECK(jb["treewidth"][0] == big.treewidth_lo);
        CHECK(jb["treewidth"][1] == big.treewidth_hi);
    }
}

TEST_CASE("statement names round-trip") {
    for (Statement s : all_statements()) {
        auto back = statement_from_name(statement_name(s));
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
    CHECK_FALSE(statement_from_name("no_such_statement").has_value());
    CHECK(statement_name(Statement::edge_bound) == std::string("edge_bound"));
    CHECK(verdict_name(Verdict::not_applicable) == std::string("not_applicable"));
}

TEST_CASE("statement evaluation on synthetic facts") {
    GraphFacts f;
    f.n = 7;
    f.m = 20;
    f.delta = 6;
    f.overfull = true;
    f.treewidth = 5;
    f.chi_prime = 7;
    f.fractional = Rational(20, 3);

    CHECK(evaluate_statement(f, Statement::edge_bound) == Verdict::pass);
    CHECK(evaluate_statement(f, Statement::not_overfull) == Verdict::not_applicable);

    // widen the degree gap artificially: hypothesis holds, conclusions fail
    f.delta = 9;
    CHECK(evaluate_statement(f, Statement::not_overfull) == Verdict::fail);
    CHECK(evaluate_statement(f, Statement::fractional_class_one) == Verdict::fail);
    CHECK(evaluate_statement(f, Statement::class_one) == Verdict::fail);
    CHECK(evaluate_statement(f, Statement::high_degree_class_one) == Verdict::fail);

    f.overfull = false;
    f.chi_prime = 9;
    f.fractional = Rational(9);
    CHECK(evaluate_statement(f, Statement::not_overfull) == Verdict::pass);
    CHECK(evaluate_statement(f, Statement::fractional_class_one) == Verdict::pass);
    CHECK(evaluate_statement(f, Statement::class_one) == Verdict::pass);
    CHECK(evaluate_statement(f, Statement::high_degree_class_one) == Verdict::pass);

    // a missing measure forces not_applicable even under a true hypothesis
    f.chi_prime.reset();
    CHECK(evaluate_statement(f, Statement::class_one) == Verdict::not_applicable);
    f.treewidth.reset();
    CHECK(evaluate_statement(f, Statement::edge_bound) == Verdict::not_applicable);
}

TEST_CASE("fact gathering respects the caps") {
    SweepLimits tiny;
    tiny.treewidth_n = 5;
    GraphFacts f = gather_facts(twctest::petersen(), all_statements(), tiny);
    CHECK(f.n == 10);
    CHECK_FALSE(f.treewidth.has_value());

    f = gather_facts(twctest::petersen(), all_statements(), {});
    CHECK(f.treewidth == 4);
    // delta = 3 < treewidth: no statement's hypothesis holds, so the
    // expensive measures are never computed
    CHECK_FALSE(f.chi_prime.has_value());
    CHECK_FALSE(f.fractional.has_value());

    f = gather_facts(construct_apex(4, 3), all_statements(), {});
    CHECK(f.treewidth == 4);
    CHECK(f.chi_prime.has_value());
}

TEST_CASE("exhaustive sweep over small graphs") {
    SweepResult r = sweep_exhaustive(5, all_statements(), {});
    CHECK(r.graphs_seen == 52);  // 1 + 2 + 4 + 11 + 34 isomorphism classes
    CHECK_FALSE(r.any_failure());
    for (Statement s : all_statements()) {
        const StatementCounts& c = r.counts.at(s);
        CHECK(c.failed == 0);
        CHECK(c.checked + c.not_applicable == 52);
        CHECK(c.passed == c.checked);
    }
    // every complete graph K_{k+1} passes edge_bound with equality, so the
    // statement is checked on a decent share of the corpus
    CHECK(r.counts.at(Statement::edge_bound).checked > 20);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("k-tree sweep") {
    SweepResult r = sweep_ktree(12, 3, Rational(2, 3), 25, 11, all_statements(), {});
    CHECK(r.graphs_seen == 25);
    CHECK_FALSE(r.any_failure());
    for (Statement s : all_statements()) CHECK(r.counts.at(s).failed == 0);
}

#include <doctest.h>

#include <random>

#include "faultdom/error.hpp"
#include "faultdom/io.hpp"
#include "faultdom/reduction.hpp"

using namespace faultdom;

namespace {

constexpr std::string_view kUnsat =
    "p cnf 4 8\n1 2 3 0\n1 2 -3 0\n1 -2 4 0\n1 -2 -4 0\n-1 2 3 0\n-1 2 -3 0\n-1 -2 4 0\n-1 -2 -4 0\n";

CnfFormula random_formula(std::mt19937& rng, std::size_t n, std::size_t m) {
    CnfFormula f;
    f.num_vars = n;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::uint32_t> vars(n);
        for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<std::uint32_t>(i + 1);
        std::shuffle(vars.begin(), vars.end(), rng);
        Clause c;
        for (int k = 0; k < 3; ++k) c[k] = {vars[k], rng() % 2 == 1};
        f.clauses.push_back(c);
    }
    return f;
}

// Direct clause evaluation over every assignment.
bool oracle_sat(const CnfFormula& f) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
        bool all = true;
        for (const auto& c : f.clauses) {
            bool any = false;
            for (const auto& l : c) any = any || (((mask >> (l.var - 1)) & 1) == (l.negated ? 0u : 1u));
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

void check_counts(const CnfFormula& f) {
    const auto r = build_reduction(f);
    const auto n = f.num_vars, m = f.clauses.size();
    CHECK(r.graph.order() == 11 * n + 8 * m);
    CHECK(r.graph.size() == 15 * n + 12 * m);
    CHECK(r.mandatory.size() == 9 * n + 8 * m);
}

}  // namespace

TEST_CASE("cnf parsing") {
    const auto f = parse_cnf("c comment\np cnf 4 2\n1 -2\n3 0 -1 2 4 0\n%\ngarbage");
    CHECK(f.num_vars == 4);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0][1] == Literal{2, true});
    CHECK(parse_cnf(format_cnf(f)).clauses == f.clauses);

    CHECK_THROWS_AS(parse_cnf("1 2 3 0\n"), InputError);
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 0\n"), InputError);
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 1 2 0\n"), InputError);
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 4 0\n"), InputError);
    CHECK_THROWS_AS(parse_cnf("p cnf 3 2\n1 2 3 0\n"), InputError);
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 3\n"), InputError);
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 x 3 0\n"), InputError);
    CHECK_THROWS_WITH_AS(parse_cnf("p cnf 0 0\n"), "cnf: formula has no clauses", InputError);
    CHECK_THROWS_AS(build_reduction(CnfFormula{}), InputError);
}

TEST_CASE("brute-force satisfiability agrees with direct evaluation") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_formula(rng, 3 + rng() % 3, 1 + rng() % 12);
        const auto a = brute_force_sat(f);
        CHECK(a.has_value() == oracle_sat(f));
        if (a) CHECK(satisfies(f, *a));
    }
    CHECK_FALSE(brute_force_sat(parse_cnf(kUnsat)).has_value());
    CHECK_FALSE(oracle_sat(parse_cnf(kUnsat)));
}

TEST_CASE("gadget data") {
    const auto& g = frozen_gadgets();
    CHECK(g.version == 1);
    CHECK(g.f_edges.size() == kFEdges);
    CHECK(g.h_edges.size() == kHEdges);
    const auto file = parse_gadget_spec(read_file(FAULTDOM_DATA_DIR "/gadgets/v1.txt"));
    CHECK(file.f_edges == g.f_edges);
    CHECK(file.h_edges == g.h_edges);
    CHECK(parse_gadget_spec(format_gadget_spec(g)).h_edges == g.h_edges);
    CHECK_THROWS_AS(parse_gadget_spec("F 0 1\n"), InputError);
    CHECK_THROWS_AS(parse_gadget_spec("version 1\nF 0 11\n"), InputError);

    const auto check = check_gadgets(g);
    CHECK_MESSAGE(check.ok, check.reason);
    GadgetSpec broken = g;
    broken.h_edges.back() = {5, 6};
    CHECK_FALSE(check_gadgets(broken).ok);
}

TEST_CASE("gadget search reproduces the shipped gadgets") {
    GadgetSearchStats stats;
    const auto found = search_gadgets(&stats);
    REQUIRE(found.has_value());
    CHECK(found->f_edges == frozen_gadgets().f_edges);
    CHECK(found->h_edges == frozen_gadgets().h_edges);
    CHECK(stats.pairs_checked >= 1);
}

TEST_CASE("construction") {
    const auto f = parse_cnf("p cnf 5 4\n1 2 3 0\n1 2 -3 0\n2 -4 5 0\n2 -4 -5 0\n");
    const auto r = build_reduction(f);
    CHECK(r.graph.order() == 87);
    CHECK(r.graph.size() == 123);
    CHECK(r.graph.label(0) == "x_1");
    CHECK(r.graph.label(12) == "xbar_2");
    CHECK(r.graph.label(55) == "c_1");
    const auto c4 = *r.graph.find_label("c_4");
    const auto xbar4 = *r.graph.find_label("xbar_4");
    CHECK(r.graph.has_edge(c4, xbar4));
    CHECK_FALSE(r.mandatory.contains(xbar4));
    CHECK(r.mandatory.contains(c4));
    CHECK(format_edge_list(build_reduction(f).graph) == format_edge_list(r.graph));
    check_counts(parse_cnf("p cnf 3 1\n-1 2 -3 0\n"));
    CHECK(build_reduction(parse_cnf("p cnf 3 1\n1 2 3 0\n")).graph.order() == 41);
    CHECK(build_reduction(parse_cnf("p cnf 3 1\n1 2 3 0\n")).graph.size() == 57);
}

TEST_CASE("assignment sets verify exactly for satisfying assignments") {
    std::mt19937 rng(9);
    VerifyOptions all;
    all.max_violations = SIZE_MAX;
    for (int trial = 0; trial < 15; ++trial) {
        const auto f = random_formula(rng, 3 + rng() % 2, 1 + rng() % 5);
        const auto r = build_reduction(f);
        std::vector<bool> a(f.num_vars);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
            for (std::size_t i = 0; i < f.num_vars; ++i) a[i] = (mask >> i) & 1;
            const auto verdict = verify(r.graph, assignment_to_set(r, a), Variant::ERR_LD, all);
            CHECK(verdict.ok == satisfies(f, a));
            for (const auto& v : verdict.violations) {
                const bool names_clause = std::any_of(v.witnesses.begin(), v.witnesses.end(), [&](VertexId w) {
                    return std::find(r.clause_vertices.begin(), r.clause_vertices.end(), w) !=
                           r.clause_vertices.end();
                });
                CHECK(names_clause);
            }
        }
    }
    const auto r = build_reduction(parse_cnf("p cnf 3 1\n1 2 3 0\n"));
    CHECK_THROWS_AS(assignment_to_set(r, {true}), InputError);
}

TEST_CASE("round trip on every single-clause formula") {
    for (int signs = 0; signs < 8; ++signs) {
        CnfFormula f;
        f.num_vars = 3;
        f.clauses.push_back({Literal{1, (signs & 1) != 0}, Literal{2, (signs & 2) != 0}, Literal{3, (signs & 4) != 0}});
        const auto r = roundtrip_check(f);
        CHECK(r.status == RoundtripStatus::Pass);
        CHECK(r.optimum == 38);
        CHECK(r.satisfiable);
        check_counts(f);
    }
}

TEST_CASE("round trip on random formulas and an unsat instance") {
    std::mt19937 rng(2024);
    int passed = 0;
    for (int trial = 0; trial < 24; ++trial) {
        const auto f = random_formula(rng, 3 + rng() % 2, 1 + rng() % 5);
        check_counts(f);
        const auto r = roundtrip_check(f);
        CAPTURE(format_cnf(f));
        CHECK(r.status == RoundtripStatus::Pass);
        CHECK(r.satisfiable == oracle_sat(f));
        if (r.satisfiable) CHECK(r.optimum == r.threshold);
        passed += r.status == RoundtripStatus::Pass;
    }
    CHECK(passed == 24);

    const auto unsat = parse_cnf(kUnsat);
    check_counts(unsat);
    const auto r = roundtrip_check(unsat);
    CHECK(r.status == RoundtripStatus::Pass);
    CHECK_FALSE(r.satisfiable);
    CHECK(r.threshold == 104);
    CHECK(r.optimum > 104);

    SearchConfig tiny;
    tiny.node_budget = 1;
    CHECK(roundtrip_check(unsat, tiny).status != RoundtripStatus::Fail);
}

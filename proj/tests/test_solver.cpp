#include <doctest.h>

#include <random>

#include "faultdom/error.hpp"
#include "faultdom/families.hpp"
#include "faultdom/solver.hpp"

using namespace faultdom;

namespace {

// Minimum over all 2^n subsets; SIZE_MAX when none passes.
std::size_t brute_force_min(const Graph& g, Variant variant) {
    const auto n = g.order();
    std::size_t best = SIZE_MAX;
    VerifyOptions once;
    once.max_violations = 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best) continue;
        VertexSet s(n);
        s.words()[0] = mask;
        if (verify(g, s, variant, once).ok) best = size;
    }
    return best;
}

Graph random_graph(std::mt19937& rng, std::size_t n, int one_in) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % one_in) == 0) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("petersen optima") {
    const auto g = make_family(Family::Petersen);
    const std::pair<Variant, std::size_t> expected[] = {
        {Variant::LD, 4}, {Variant::RED_LD, 6}, {Variant::DET_LD, 6}, {Variant::ERR_LD, 9}};
    for (auto [variant, value] : expected) {
        const auto r = exact_min(g, variant);
        CAPTURE(variant_name(variant));
        CHECK(r.optimum == value);
        CHECK(r.proved_optimal);
        CHECK(r.witness.size() == value);
        CHECK(verify(g, r.witness, variant).ok);
    }
}

TEST_CASE("cycles and nonexistence") {
    CHECK(exact_min(make_family(Family::Cycle, 5), Variant::ERR_LD).optimum == 5);
    CHECK(exact_min(make_family(Family::Cycle, 9), Variant::ERR_LD).optimum == 9);
    CHECK_THROWS_AS(exact_min(make_family(Family::Cycle, 3), Variant::ERR_LD), NoSolutionError);
    CHECK_THROWS_AS(greedy_upper(make_family(Family::Tree3Ball, 1), Variant::ERR_LD), NoSolutionError);
    CHECK(greedy_upper(make_family(Family::Cycle, 5), Variant::ERR_LD).size() == 5);
    const auto pet = make_family(Family::Petersen);
    const auto greedy = greedy_upper(pet, Variant::ERR_LD);
    CHECK(greedy.size() <= 10);
    CHECK(verify(pet, greedy, Variant::ERR_LD).ok);
}

TEST_CASE("exact solver matches brute force on random graphs") {
    std::mt19937 rng(77);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + rng() % 8;
        const auto g = random_graph(rng, n, 2 + static_cast<int>(rng() % 2));
        for (Variant variant : kAllVariants) {
            const auto brute = brute_force_min(g, variant);
            if (brute == SIZE_MAX) {
                CHECK_THROWS_AS(exact_min(g, variant), NoSolutionError);
                continue;
            }
            const auto r = exact_min(g, variant);
            CAPTURE(n);
            CAPTURE(variant_name(variant));
            CHECK(r.optimum == brute);
            CHECK(r.proved_optimal);
            CHECK(verify(g, r.witness, variant).ok);
            CHECK(verify(g, greedy_upper(g, variant), variant).ok);
            ++solved;
        }
    }
    CHECK(solved > 400);
}

TEST_CASE("variant optima are ordered") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_graph(rng, 9 + rng() % 6, 3);
        if (!errld_exists(g)) continue;
        std::size_t prev = 0;
        for (Variant variant : kAllVariants) {
            const auto r = exact_min(g, variant);
            CHECK(r.optimum >= prev);
            prev = r.optimum;
        }
    }
}

TEST_CASE("parallel search reports the same optimum") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_graph(rng, 16, 4);
        if (!errld_exists(g)) continue;
        SearchConfig par;
        par.parallel_width = 4;
        const auto a = exact_min(g, Variant::ERR_LD);
        const auto b = exact_min(g, Variant::ERR_LD, par);
        CHECK(a.optimum == b.optimum);
        CHECK(b.proved_optimal);
        CHECK(verify(g, b.witness, Variant::ERR_LD).ok);
    }
    SearchConfig par;
    par.parallel_width = 3;
    CHECK(exact_min(make_family(Family::Petersen), Variant::ERR_LD, par).optimum == 9);
}

TEST_CASE("budgets degrade instead of failing") {
    const auto g = make_torus(LatticeKind::SQ, 6, 6);
    SearchConfig tiny;
    tiny.node_budget = 5;
    const auto r = exact_min(g, Variant::ERR_LD, tiny);
    CHECK_FALSE(r.proved_optimal);
    CHECK(verify(g, r.witness, Variant::ERR_LD).ok);
    CHECK(format_solve_result(r).find("unproved") != std::string::npos);
    tiny.node_budget = 0;
    CHECK_THROWS_AS(exact_min(g, Variant::ERR_LD, tiny), InputError);
}

TEST_CASE("hint seeds the incumbent") {
    const auto g = make_family(Family::Petersen);
    SearchConfig cfg;
    cfg.hint = DetectorSet::all(10);
    CHECK(exact_min(g, Variant::ERR_LD, cfg).optimum == 9);
    cfg.hint = DetectorSet(10);
    CHECK_THROWS_AS(exact_min(g, Variant::ERR_LD, cfg), InputError);
}

TEST_CASE("format") {
    const auto r = exact_min(make_family(Family::Cycle, 5), Variant::ERR_LD);
    CHECK(format_solve_result(r).rfind("ERR_LD 5 proved ", 0) == 0);
    CHECK(format_solve_result(r).find("\n0 1 2 3 4\n") != std::string::npos);
}

TEST_CASE("distance-5 packings") {
    const auto pet = make_family(Family::Petersen);
    CHECK(greedy_distance5_packing(pet).members() == std::vector<VertexId>{0});
    const auto c12 = greedy_distance5_packing(make_family(Family::Cycle, 12));
    CHECK(c12.members() == std::vector<VertexId>{0, 5});

    const std::vector<VertexId> zero{0};
    CHECK(packing_complement(pet, VertexSet::of(10, zero)).size() == 9);
    const std::vector<VertexId> close{0, 7};
    CHECK_THROWS_WITH_AS(packing_complement(pet, VertexSet::of(10, close)), "packing vertices 0 7 at distance 2",
                         InputError);
    CHECK(packing_complement(pet, VertexSet(10)).size() == 10);
    CHECK_THROWS_AS(packing_complement(make_family(Family::Cycle, 6), VertexSet(6)), InputError);

    const auto hex = make_torus(LatticeKind::HEX, 10, 10);
    const auto p = greedy_distance5_packing(hex);
    const auto s = packing_complement(hex, p);
    CHECK(verify(hex, s, Variant::ERR_LD).ok);
    CHECK(s.size() * 46 <= 45 * hex.order() + 45);

    // listing order of P does not matter
    const auto members = p.members();
    std::vector<VertexId> reversed(members.rbegin(), members.rend());
    CHECK(packing_complement(hex, VertexSet::of(hex.order(), reversed)) == s);
}

TEST_CASE("square torus optimum matches the periodic density") {
    const auto r = exact_min(make_torus(LatticeKind::SQ, 6, 6), Variant::ERR_LD);
    CHECK(r.optimum == 24);
    CHECK(r.proved_optimal);
    CHECK(verify(make_torus(LatticeKind::SQ, 6, 6), r.witness, Variant::ERR_LD).ok);
}

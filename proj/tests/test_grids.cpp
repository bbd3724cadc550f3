#include <doctest.h>

#include <random>

#include "faultdom/error.hpp"
#include "faultdom/grids.hpp"
#include "faultdom/io.hpp"

using namespace faultdom;

namespace {

constexpr LatticeKind kLattices[] = {LatticeKind::SQ, LatticeKind::TRI, LatticeKind::HEX, LatticeKind::KING,
                                     LatticeKind::LADDER};

// Same pattern on a torus twice as large in each direction, all pairs checked.
bool big_torus_ok(const PeriodicPattern& p) {
    auto [rows, cols] = certification_dims(p);
    if (p.lattice != LatticeKind::LADDER) rows *= 2;
    cols *= 2;
    VerifyOptions full;
    full.full_pair_scan = true;
    full.max_violations = 1;
    return verify(make_torus(p.lattice, rows, cols), tile(p, rows, cols), Variant::ERR_LD, full).ok;
}

PeriodicPattern shifted(const PeriodicPattern& p, std::size_t dr, std::size_t dc) {
    std::vector<Cell> offsets;
    for (auto [r, c] : p.offsets) offsets.emplace_back((r + dr) % p.pr, (c + dc) % p.pc);
    return make_pattern(p.lattice, p.pr, p.pc, offsets);
}

std::string pattern_file(LatticeKind k) {
    std::string name(lattice_name(k));
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return read_file(std::string(FAULTDOM_DATA_DIR) + "/patterns/" + name + ".pat");
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(Rational(10, 12) == Rational(5, 6));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(3, 5).str() == "3/5");
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("pattern construction, density and files") {
    const auto ladder = ladder_pattern();
    CHECK(ladder.offsets.size() == 5);
    CHECK(pattern_density(ladder) == Rational(5, 6));
    CHECK(pattern_density(make_pattern(LatticeKind::KING, 3, 3, {{0, 0}, {1, 1}, {2, 2}})) == Rational(1, 3));

    std::vector<Cell> all;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c) all.emplace_back(r, c);
    for (auto k : kLattices) CHECK(pattern_density(make_pattern(k, 2, 4, all)) == Rational(1, 1));

    CHECK_THROWS_AS(make_pattern(LatticeKind::SQ, 3, 3, {}), InputError);
    CHECK_THROWS_AS(make_pattern(LatticeKind::SQ, 0, 3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(make_pattern(LatticeKind::SQ, 2, 2, {{2, 0}}), InputError);
    CHECK_THROWS_AS(make_pattern(LatticeKind::LADDER, 3, 2, {{0, 0}}), InputError);
    CHECK(make_pattern(LatticeKind::SQ, 2, 2, {{1, 1}, {0, 0}, {1, 1}}).offsets == std::vector<Cell>{{0, 0}, {1, 1}});

    const auto text = format_pattern(ladder);
    CHECK(text == "LADDER 2 3\n0 0\n0 1\n0 2\n1 1\n1 2\n");
    CHECK(parse_pattern(text) == ladder);
    CHECK(parse_pattern("# c\nhex 2 2 # x\n0 0\n0 1\n1 0\n").lattice == LatticeKind::HEX);
    CHECK_THROWS_AS(parse_pattern(""), InputError);
    CHECK_THROWS_AS(parse_pattern("SQ 2\n0 0\n"), InputError);
    CHECK_THROWS_AS(parse_pattern("SQ 2 2\n0 0 1\n"), InputError);
    CHECK_THROWS_AS(parse_pattern("SQ 2 2\n"), InputError);
    CHECK_THROWS_AS(parse_pattern("OCT 2 2\n0 0\n"), InputError);

    for (auto k : kLattices) CHECK(parse_pattern(pattern_file(k)) == reference_pattern(k));
}

TEST_CASE("certification dimensions") {
    CHECK(certification_dims(make_pattern(LatticeKind::SQ, 3, 3, {{0, 0}})) == Cell{6, 6});
    CHECK(certification_dims(make_pattern(LatticeKind::SQ, 1, 2, {{0, 0}})) == Cell{5, 6});
    CHECK(certification_dims(make_pattern(LatticeKind::KING, 4, 4, {{0, 0}})) == Cell{8, 8});
    CHECK(certification_dims(make_pattern(LatticeKind::HEX, 2, 4, {{0, 0}})) == Cell{6, 8});
    CHECK(certification_dims(make_pattern(LatticeKind::HEX, 3, 1, {{0, 0}})) == Cell{6, 6});
    CHECK(certification_dims(ladder_pattern()) == Cell{2, 6});
    CHECK(certification_dims(make_pattern(LatticeKind::LADDER, 2, 4, {{0, 0}})) == Cell{2, 8});
    CHECK_THROWS_AS(certification_dims(make_pattern(LatticeKind::SQ, 1, 99'999, {{0, 0}})), InputError);
}

TEST_CASE("reference patterns certify at the quoted densities") {
    for (auto k : kLattices) {
        const auto p = reference_pattern(k);
        CAPTURE(lattice_name(k));
        const auto cert = certify_pattern(p);
        CHECK(cert.ok);
        CHECK(pattern_density(p) == quoted_upper_bound(k));
        CHECK(pattern_density(p) >= density_lower_bound(k));
        CHECK(big_torus_ok(p));
    }
    CHECK(density_lower_bound(LatticeKind::SQ) == Rational(3, 5));
    CHECK(density_lower_bound(LatticeKind::TRI) == Rational(3, 7));
    CHECK(density_lower_bound(LatticeKind::KING) == Rational(1, 3));
    CHECK(density_lower_bound(LatticeKind::HEX) == Rational(3, 4));

    // six offsets in a 3x3 cell
    const auto sq3 = make_pattern(LatticeKind::SQ, 3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(pattern_density(sq3) == Rational(2, 3));
    CHECK(certify_pattern(sq3).ok);
}

TEST_CASE("sparse patterns fail 3-domination") {
    const auto half = make_pattern(LatticeKind::SQ, 1, 2, {{0, 0}});
    const auto cert = certify_pattern(half);
    REQUIRE_FALSE(cert.ok);
    CHECK(cert.verdict.violations.front().property == 1);

    std::mt19937 rng(31);
    int below = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = kLattices[rng() % 5];
        const std::size_t pr = k == LatticeKind::LADDER ? 2 : 1 + rng() % 4, pc = 1 + rng() % 4;
        std::vector<Cell> offsets;
        for (std::size_t r = 0; r < pr; ++r)
            for (std::size_t c = 0; c < pc; ++c)
                if (rng() % 3 != 0) offsets.emplace_back(r, c);
        if (offsets.empty()) continue;
        const auto p = make_pattern(k, pr, pc, offsets);
        const auto ok = certify_pattern(p).ok;
        if (ok) CHECK(pattern_density(p) >= density_lower_bound(k));
        if (pattern_density(p) < density_lower_bound(k)) ++below;
        CHECK(ok == big_torus_ok(p));
    }
    CHECK(below > 10);
}

TEST_CASE("certification is translation invariant") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 150; ++trial) {
        const auto k = kLattices[rng() % 5];
        const std::size_t pr = k == LatticeKind::LADDER ? 2 : 1 + rng() % 4, pc = 1 + rng() % 4;
        std::vector<Cell> offsets;
        for (std::size_t r = 0; r < pr; ++r)
            for (std::size_t c = 0; c < pc; ++c)
                if (rng() % 5 != 0) offsets.emplace_back(r, c);
        if (offsets.empty()) continue;
        const auto p = make_pattern(k, pr, pc, offsets);
        const bool ok = certify_pattern(p).ok;
        for (std::size_t dr = 0; dr < pr; ++dr)
            for (std::size_t dc = 0; dc < pc; ++dc) {
                if (k == LatticeKind::LADDER && dr != 0) continue;
                if (k == LatticeKind::HEX && (dr + dc) % 2 != 0 && pr % 2 == 0 && pc % 2 == 0) continue;
                CHECK(certify_pattern(shifted(p, dr, dc)).ok == ok);
            }
    }
}

TEST_CASE("cycles need every vertex") {
    for (std::size_t n = 5; n <= 12; ++n) {
        const auto g = make_family(Family::Cycle, n);
        CHECK(verify(g, DetectorSet::all(n), Variant::ERR_LD).ok);
        for (VertexId v = 0; v < n; ++v) {
            auto s = DetectorSet::all(n);
            s.erase(v);
            CHECK_FALSE(verify(g, s, Variant::ERR_LD).ok);
        }
    }
}

TEST_CASE("ladder patterns") {
    CHECK(certify_pattern(ladder_pattern()).ok);
    const auto literal = ladder_pattern_literal();
    CHECK(pattern_density(literal) == Rational(2, 3));
    const auto cert = certify_pattern(literal);
    REQUIRE_FALSE(cert.ok);
    CHECK(cert.verdict.violations.front().property == 1);
}

TEST_CASE("pattern search") {
    const auto sq = search_min_pattern(LatticeKind::SQ, 3, 3);
    REQUIRE(sq);
    CHECK(pattern_density(*sq) == Rational(2, 3));
    CHECK(certify_pattern(*sq).ok);

    const auto sq_wide = search_min_pattern(LatticeKind::SQ, 3, 6, 4);
    REQUIRE(sq_wide);
    CHECK(*sq_wide == reference_pattern(LatticeKind::SQ));

    const auto hex = search_min_pattern(LatticeKind::HEX, 4, 4);
    REQUIRE(hex);
    CHECK(pattern_density(*hex) == Rational(3, 4));
    CHECK(*hex == reference_pattern(LatticeKind::HEX));

    const auto ladder = search_min_pattern(LatticeKind::LADDER, 2, 6);
    REQUIRE(ladder);
    CHECK(pattern_density(*ladder) == Rational(5, 6));

    const auto tri = search_min_pattern(LatticeKind::TRI, 4, 4, 3);
    REQUIRE(tri);
    CHECK(*tri == reference_pattern(LatticeKind::TRI));
    const auto king = search_min_pattern(LatticeKind::KING, 4, 4, 2);
    REQUIRE(king);
    CHECK(*king == reference_pattern(LatticeKind::KING));
    CHECK(search_min_pattern(LatticeKind::KING, 4, 4, 1) == king);

    const auto small = search_min_pattern(LatticeKind::SQ, 2, 2);
    REQUIRE(small);
    CHECK(pattern_density(*small) > Rational(2, 3));
    CHECK_THROWS_AS(search_min_pattern(LatticeKind::SQ, 6, 7), InputError);
}

TEST_CASE("3-regular tree construction") {
    CHECK_THROWS_AS(build_tree3_errld(2), InputError);
    for (std::size_t radius : {3u, 5u, 6u}) {
        const auto t = build_tree3_errld(radius);
        CAPTURE(radius);
        CHECK(t.interior_verdict.ok);
        CHECK_FALSE(t.detectors.contains(0));
        for (VertexId v = 0; v < t.graph.order(); ++v) {
            if (!t.interior.contains(v)) continue;
            std::size_t count = t.detectors.contains(v);
            for (VertexId w : t.graph.neighbors(v)) count += t.detectors.contains(w);
            CHECK(count == 3);
        }
    }
    const auto t6 = build_tree3_errld(6);
    CHECK(std::abs(t6.interior_density.value() - 0.75) < 0.05);
}

TEST_CASE("worked square-grid example aligns with the 2/3 pattern") {
    const auto p = reference_pattern(LatticeKind::SQ);
    const auto matches = find_square_example(p);
    REQUIRE_FALSE(matches.empty());
    for (const auto& m : matches) {
        const std::string labels = m.transposed ? "letter=row" : "letter=column";
        MESSAGE("alignment shift " << m.row_shift << "," << m.col_shift << " " << labels);
    }
    CHECK_THROWS_AS(find_square_example(reference_pattern(LatticeKind::HEX)), InputError);
}

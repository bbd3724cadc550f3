#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "faultdom/error.hpp"
#include "faultdom/families.hpp"
#include "faultdom/verify.hpp"

using namespace faultdom;

namespace {

using Set = std::set<VertexId>;

// Literal set-based reading of the four characterizations.
struct Naive {
    const Graph& g;
    Set s;

    Set A(VertexId x) const {
        Set out;
        for (VertexId w : g.neighbors(x))
            if (s.count(w)) out.insert(w);
        return out;
    }
    static Set sym(const Set& a, const Set& b) {
        Set out;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
        return out;
    }
    static Set minus(const Set& a, const Set& b) {
        Set out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
        return out;
    }
    int closed(VertexId v) const { return static_cast<int>(A(v).size() + s.count(v)); }
    bool in(VertexId v) const { return s.count(v) != 0; }

    // (property, deficit) for the vertex condition.
    std::pair<int, int> vertex(Variant var, VertexId v) const {
        if (var == Variant::LD) {
            if (in(v)) return {0, 0};
            const int a = static_cast<int>(A(v).size());
            return a >= 1 ? std::pair{0, 0} : std::pair{1, 1 - a};
        }
        const int k = var == Variant::ERR_LD ? 3 : 2;
        return closed(v) >= k ? std::pair{0, 0} : std::pair{1, k - closed(v)};
    }

    std::pair<int, int> pair(Variant var, VertexId u, VertexId v) const {
        auto need = [](int p, int have, int want) { return have >= want ? std::pair{0, 0} : std::pair{p, want - have}; };
        const Set au = A(u), av = A(v);
        const bool ui = in(u), vi = in(v);
        // d = detector, o = non-detector for mixed pairs
        const VertexId d = ui ? u : v, o = ui ? v : u;
        const Set ad = A(d), ao = A(o);
        const int sz = static_cast<int>(sym(au, av).size());
        switch (var) {
            case Variant::LD:
                if (!ui && !vi) return need(2, sz, 1);
                return {0, 0};
            case Variant::RED_LD:
                if (ui != vi) return need(2, static_cast<int>(minus(sym(ad, ao), {d}).size()), 1);
                if (!ui) return need(3, sz, 2);
                return {0, 0};
            case Variant::DET_LD: {
                if (ui && vi) return need(2, sz, 1);
                if (ui != vi) {
                    const int a = static_cast<int>(minus(ao, ad).size());
                    const int b = static_cast<int>(minus(ad, ao).size());
                    if (a >= 2 || b >= 1) return {0, 0};
                    return {3, std::min(2 - a, 1 - b)};
                }
                const int a = static_cast<int>(minus(av, au).size());
                const int b = static_cast<int>(minus(au, av).size());
                if (a >= 2 || b >= 2) return {0, 0};
                return {4, std::min(2 - a, 2 - b)};
            }
            case Variant::ERR_LD:
                if (ui && vi) return need(2, static_cast<int>(minus(sym(au, av), {u, v}).size()), 1);
                if (ui != vi) return need(3, static_cast<int>(minus(sym(ad, ao), {d}).size()), 2);
                return need(4, sz, 3);
        }
        return {0, 0};
    }

    Verdict verify(Variant var) const {
        Verdict out;
        const auto n = static_cast<VertexId>(g.order());
        for (VertexId v = 0; v < n; ++v)
            if (auto [p, d] = vertex(var, v); p) out.violations.push_back({var, p, {v}, d});
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (auto [p, d] = pair(var, u, v); p) out.violations.push_back({var, p, {u, v}, d});
        out.ok = out.violations.empty();
        return out;
    }
};

Graph random_graph(std::mt19937& rng, std::size_t n, int one_in) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % one_in) == 0) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

DetectorSet random_set(std::mt19937& rng, std::size_t n, int percent) {
    DetectorSet s(n);
    for (VertexId v = 0; v < n; ++v)
        if (static_cast<int>(rng() % 100) < percent) s.insert(v);
    return s;
}

Set as_set(const VertexSet& s) {
    const auto m = s.members();
    return Set(m.begin(), m.end());
}

// Located-dominating by definition: every non-detector has a nonempty and
// unique detector neighbourhood.
bool is_ld_by_definition(const Graph& g, const Set& s) {
    Naive nv{g, s};
    std::set<Set> seen;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (s.count(v)) continue;
        const Set a = nv.A(v);
        if (a.empty() || !seen.insert(a).second) return false;
    }
    return true;
}

VerifyOptions unlimited(bool full = false) {
    VerifyOptions o;
    o.max_violations = SIZE_MAX;
    o.full_pair_scan = full;
    return o;
}

}  // namespace

TEST_CASE("domination and distinguishing counts") {
    const auto c5 = make_family(Family::Cycle, 5);
    const auto pet = make_family(Family::Petersen);
    CHECK(domination_count(c5, VertexSet::full(5), 0) == 3);
    VertexSet s = VertexSet::full(10);
    s.erase(0);
    CHECK(domination_count(pet, s, 1) == 3);
    CHECK(domination_count(pet, VertexSet(10), 4) == 0);

    const auto c4 = make_family(Family::Cycle, 4);
    CHECK(distinguishing_count(c4, VertexSet::full(4), 0, 2) == 0);
    CHECK(distinguishing_count(c4, VertexSet::full(4), 0, 1) == 2);
    CHECK_THROWS_AS(distinguishing_count(c4, VertexSet::full(4), 1, 1), InputError);
}

TEST_CASE("verify examples") {
    const auto pet = make_family(Family::Petersen);
    auto all_but_0 = DetectorSet::all(10);
    all_but_0.erase(0);
    CHECK(verify(pet, all_but_0, Variant::ERR_LD).ok);

    const auto c5 = make_family(Family::Cycle, 5);
    const std::vector<VertexId> four{0, 1, 2, 3};
    const auto v5 = verify(c5, DetectorSet::of(5, four), Variant::ERR_LD);
    REQUIRE_FALSE(v5.ok);
    const Violation at4{Variant::ERR_LD, 1, {4}, 1};
    CHECK(std::find(v5.violations.begin(), v5.violations.end(), at4) != v5.violations.end());

    const auto c4 = make_family(Family::Cycle, 4);
    const auto v4 = verify(c4, DetectorSet::all(4), Variant::ERR_LD);
    REQUIRE(v4.violations.size() == 2);
    CHECK(v4.violations[0] == Violation{Variant::ERR_LD, 2, {0, 2}, 1});
    CHECK(v4.violations[1] == Violation{Variant::ERR_LD, 2, {1, 3}, 1});
    CHECK(format_verdict(v4) == "VIOLATION ERR_LD ii 0 2 1\nVIOLATION ERR_LD ii 1 3 1\n");
    CHECK(format_verdict(verify(pet, all_but_0, Variant::ERR_LD)) == "OK\n");

    // {v2, v3, v4, v5, v8, v9}
    const std::vector<VertexId> red{1, 2, 3, 4, 7, 8};
    CHECK(verify(pet, DetectorSet::of(10, red), Variant::RED_LD).ok);

    const auto empty = verify(pet, DetectorSet(10), Variant::ERR_LD);
    CHECK_FALSE(empty.ok);
    CHECK(empty.violations.size() == 10 + 45);
}

TEST_CASE("violation cap") {
    const auto pet = make_family(Family::Petersen);
    VerifyOptions o;
    o.max_violations = 3;
    const auto v = verify(pet, DetectorSet(10), Variant::ERR_LD, o);
    CHECK(v.violations.size() == 3);
    CHECK(v.truncated);
    CHECK(format_verdict(v).find("TRUNCATED") != std::string::npos);
}

TEST_CASE("verify agrees with the set-based oracle, restricted and full scans") {
    std::mt19937 rng(2024);
    int failing = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + rng() % 12;
        const auto g = random_graph(rng, n, 2 + static_cast<int>(rng() % 4));
        const auto s = random_set(rng, n, 40 + static_cast<int>(rng() % 60));
        const Naive oracle{g, as_set(s)};
        for (Variant var : kAllVariants) {
            const auto expect = oracle.verify(var);
            const auto restricted = verify(g, s, var, unlimited());
            const auto full = verify(g, s, var, unlimited(true));
            CHECK(restricted == expect);
            CHECK(full == expect);
            failing += !expect.ok;
        }
    }
    CHECK(failing > 100);
}

TEST_CASE("locality shortcut matches the full scan on sparse graphs and tori") {
    std::mt19937 rng(5);
    const auto sq = make_torus(LatticeKind::SQ, 7, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_set(rng, sq.order(), 55 + static_cast<int>(rng() % 45));
        for (Variant var : kAllVariants) CHECK(verify(sq, s, var, unlimited()) == verify(sq, s, var, unlimited(true)));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_graph(rng, 40, 12);
        const auto s = random_set(rng, 40, 70);
        for (Variant var : kAllVariants) CHECK(verify(g, s, var, unlimited()) == verify(g, s, var, unlimited(true)));
    }
}

TEST_CASE("deficits are re-checkable from the witnesses") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + rng() % 10;
        const auto g = random_graph(rng, n, 3);
        const auto s = random_set(rng, n, 60);
        const Naive oracle{g, as_set(s)};
        for (Variant var : kAllVariants)
            for (const auto& v : verify(g, s, var).violations) {
                const auto [p, d] = v.witnesses.size() == 1 ? oracle.vertex(var, v.witnesses[0])
                                                             : oracle.pair(var, v.witnesses[0], v.witnesses[1]);
                CHECK(p == v.property);
                CHECK(d == v.deficit);
                CHECK(d > 0);
            }
    }
}

TEST_CASE("LD and RED_LD agree with their definitions") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const auto g = random_graph(rng, n, 2 + static_cast<int>(rng() % 3));
        const auto s = random_set(rng, n, 30 + static_cast<int>(rng() % 70));
        const Set members = as_set(s);
        CHECK(verify(g, s, Variant::LD).ok == is_ld_by_definition(g, members));
        bool redundant = !members.empty();
        for (VertexId x : members) {
            Set smaller = members;
            smaller.erase(x);
            redundant = redundant && is_ld_by_definition(g, smaller);
        }
        CHECK(verify(g, s, Variant::RED_LD).ok == redundant);
    }
}

TEST_CASE("hierarchy, unified form and code distance") {
    std::mt19937 rng(31);
    int err_ok = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 3 + rng() % 10;
        const auto g = random_graph(rng, n, 2 + static_cast<int>(rng() % 3));
        const auto s = random_set(rng, n, 50 + static_cast<int>(rng() % 51));
        const bool ld = verify(g, s, Variant::LD).ok;
        const bool red = verify(g, s, Variant::RED_LD).ok;
        const bool det = verify(g, s, Variant::DET_LD).ok;
        const bool err = verify(g, s, Variant::ERR_LD).ok;
        CHECK((!err || det));
        CHECK((!det || red));
        CHECK((!red || ld));
        CHECK(err == verify_errld_unified(g, s));
        const auto cd = code_min_distance(g, s);
        CHECK(err == (!cd.degenerate && cd.min_distance >= 3));
        err_ok += err;
    }
    CHECK(err_ok > 50);
}

TEST_CASE("existence matches the full detector set") {
    std::mt19937 rng(3);
    CHECK_FALSE(errld_exists(make_family(Family::Path, 4)));
    CHECK_FALSE(errld_exists(make_family(Family::Cycle, 4)));
    CHECK(errld_exists(make_family(Family::Petersen)));
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + rng() % 14;
        const auto g = random_graph(rng, n, 2 + static_cast<int>(rng() % 3));
        CHECK(errld_exists(g) == verify(g, VertexSet::full(n), Variant::ERR_LD).ok);
        CHECK(variant_exists(g, Variant::LD));
    }
}

TEST_CASE("adding a detector never lowers domination") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_graph(rng, 12, 3);
        auto s = random_set(rng, 12, 40);
        const VertexId extra = rng() % 12;
        auto t = s;
        t.insert(extra);
        for (VertexId v = 0; v < 12; ++v) CHECK(domination_count(g, t, v) >= domination_count(g, s, v));
    }
}

TEST_CASE("expected transmissions") {
    const auto c5 = make_family(Family::Cycle, 5);
    const auto t = expected_transmissions(c5, VertexSet::full(5), VertexId{0});
    CHECK(t.detectors == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(t.symbols == std::vector<Symbol>{2, 1, 0, 0, 1});
    const auto none = expected_transmissions(c5, VertexSet::full(5), std::nullopt);
    CHECK(std::all_of(none.symbols.begin(), none.symbols.end(), [](Symbol x) { return x == 0; }));

    const auto pet = make_family(Family::Petersen);
    auto s = DetectorSet::all(10);
    s.erase(0);
    const auto tp = expected_transmissions(pet, s, VertexId{0});
    for (std::size_t i = 0; i < tp.size(); ++i) {
        const VertexId w = tp.detectors[i];
        CHECK(tp.symbols[i] == ((w == 1 || w == 4 || w == 5) ? 1 : 0));
    }
}

TEST_CASE("code distance examples") {
    const auto pet = make_family(Family::Petersen);
    auto s = DetectorSet::all(10);
    s.erase(0);
    CHECK(code_min_distance(pet, s).min_distance >= 3);
    CHECK(code_min_distance(make_family(Family::Cycle, 4), VertexSet::full(4)).min_distance == 2);
    const auto empty = code_min_distance(pet, VertexSet(10));
    CHECK(empty.degenerate);
    CHECK(empty.min_distance == CodeDistance::kInfinite);
}

TEST_CASE("variant names") {
    for (Variant v : kAllVariants) CHECK(parse_variant(variant_name(v)) == v);
    CHECK(parse_variant("err") == Variant::ERR_LD);
    CHECK_THROWS_AS(parse_variant("foo"), InputError);
    CHECK(roman(4) == "iv");
}

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "faultdom/corpus.hpp"
#include "faultdom/families.hpp"
#include "faultdom/grids.hpp"
#include "faultdom/io.hpp"
#include "faultdom/localization.hpp"
#include "faultdom/reduction.hpp"
#include "faultdom/solver.hpp"
#include "faultdom/verify.hpp"

using namespace faultdom;

namespace {

struct Result {
    bool ok = false;
    std::string detail;
};

std::string data_path(const std::string& rel) { return std::string(FAULTDOM_DATA_DIR) + "/" + rel; }

VertexSet subset(std::size_t n, std::uint64_t mask) {
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.insert(v);
    return s;
}

bool errld_ok(const Graph& g, const VertexSet& s) {
    VerifyOptions once;
    once.max_violations = 1;
    return verify(g, s, Variant::ERR_LD, once).ok;
}

std::vector<Graph> small_corpus() { return parse_graph6_lines(read_file(data_path("corpus/small.g6"))); }

std::vector<Graph> cubic_corpus() {
    auto graphs = parse_graph6_lines(read_file(data_path("corpus/cubic.g6")));
    std::vector<Graph> out;
    for (auto& g : graphs)
        if (find_twins(g).empty()) out.push_back(std::move(g));
    return out;
}

Result petersen_values() {
    const auto g = make_family(Family::Petersen);
    const std::size_t want[] = {4, 6, 6, 9};
    std::ostringstream got;
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto r = exact_min(g, kAllVariants[i]);
        ok = ok && r.proved_optimal && r.optimum == want[i] && verify(g, r.witness, kAllVariants[i]).ok;
        got << (i ? "/" : "") << r.optimum;
    }
    return {ok, "LD/RED/DET/ERR = " + got.str()};
}

Result brute_force_equivalence() {
    const auto graphs = small_corpus();
    std::size_t regenerated = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& g : all_graphs(n)) regenerated += errld_candidate(g);
    std::size_t mismatches = 0;
    for (const auto& g : graphs) {
        const auto n = g.order();
        std::size_t best = SIZE_MAX;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto k = static_cast<std::size_t>(std::popcount(mask));
            if (k < best && errld_ok(g, subset(n, mask))) best = k;
        }
        const auto r = exact_min(g, Variant::ERR_LD);
        mismatches += !(r.proved_optimal && r.optimum == best);
    }
    const bool ok = mismatches == 0 && regenerated == graphs.size() && !graphs.empty();
    return {ok, std::to_string(graphs.size()) + " graphs (regenerated " + std::to_string(regenerated) +
                    "), mismatches " + std::to_string(mismatches)};
}

Result code_distance_equivalence() {
    std::size_t pairs = 0, passing = 0, mismatches = 0;
    for (const auto& g : small_corpus()) {
        const auto n = g.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto s = subset(n, mask);
            const bool ok = errld_ok(g, s);
            const auto cd = code_min_distance(g, s);
            mismatches += ok != (!cd.degenerate && cd.min_distance >= 3);
            passing += ok;
            ++pairs;
        }
    }
    return {mismatches == 0, std::to_string(pairs) + " (G,S) pairs, " + std::to_string(passing) +
                                 " ERR_LD, mismatches " + std::to_string(mismatches)};
}

Result existence() {
    std::size_t graphs = 0, exist = 0, mismatches = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& g : all_graphs(n)) {
            const bool e = errld_exists(g);
            mismatches += e != errld_ok(g, VertexSet::full(n));
            exist += e;
            ++graphs;
        }
    for (const auto& g : small_corpus()) mismatches += !errld_exists(g);
    return {mismatches == 0, std::to_string(graphs) + " graphs (n <= 8), " + std::to_string(exist) +
                                 " admit ERR_LD, mismatches " + std::to_string(mismatches)};
}

Result hierarchy() {
    std::mt19937_64 rng(20240501);
    std::size_t violations = 0;
    std::size_t passes[4] = {};
    for (int sample = 0; sample < 10000; ++sample) {
        const std::size_t n = 5 + rng() % 10;
        const auto edge_pct = 20 + rng() % 50, set_pct = 40 + rng() % 61;
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (rng() % 100 < edge_pct) edges.emplace_back(u, v);
        const auto g = Graph::from_edges(n, edges);
        VertexSet s(n);
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 100 < set_pct) s.insert(v);
        bool stronger = false;
        for (int i = 3; i >= 0; --i) {
            const bool ok = verify(g, s, kAllVariants[i]).ok;
            violations += stronger && !ok;
            stronger = ok;
            passes[i] += ok;
        }
    }
    std::ostringstream d;
    d << "10000 samples, passing LD/RED/DET/ERR " << passes[0] << "/" << passes[1] << "/" << passes[2] << "/"
      << passes[3] << ", violations " << violations;
    return {violations == 0 && passes[3] > 0, d.str()};
}

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

Result reduction_roundtrip() {
    std::vector<CnfFormula> formulas;
    for (int signs = 0; signs < 8; ++signs) {
        CnfFormula f;
        f.num_vars = 3;
        f.clauses.push_back({Literal{1, (signs & 1) != 0}, Literal{2, (signs & 2) != 0}, Literal{3, (signs & 4) != 0}});
        formulas.push_back(f);
    }
    std::mt19937 rng(46);
    for (int i = 0; i < 24; ++i) formulas.push_back(random_formula(rng, 3 + rng() % 2, 1 + rng() % 5));
    const auto unsat = parse_cnf(read_file(data_path("cnf/unsat.cnf")));
    const bool unsat_checked = !brute_force_sat(unsat).has_value();
    formulas.push_back(unsat);

    std::size_t passed = 0, counts_ok = 0, single_38 = 0, sat = 0;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& f = formulas[i];
        const auto n = f.num_vars, m = f.clauses.size();
        const auto r = build_reduction(f);
        counts_ok += r.graph.order() == 11 * n + 8 * m && r.graph.size() == 15 * n + 12 * m &&
                     r.mandatory.size() == 9 * n + 8 * m;
        const auto rt = roundtrip_check(f);
        passed += rt.status == RoundtripStatus::Pass;
        sat += rt.satisfiable;
        if (i < 8) single_38 += rt.optimum == 38 && rt.proved;
    }
    const bool ok = passed == formulas.size() && counts_ok == formulas.size() && single_38 == 8 && unsat_checked;
    return {ok, std::to_string(passed) + "/" + std::to_string(formulas.size()) + " round trips (" + std::to_string(sat) +
                    " sat, unsat instance included), single-clause optimum 38 in " + std::to_string(single_38) +
                    "/8, count invariants " + std::to_string(counts_ok) + "/" + std::to_string(formulas.size())};
}

Result grid_certifications() {
    struct Case {
        LatticeKind lattice;
        std::size_t max_pr, max_pc;
    };
    const Case cases[] = {{LatticeKind::SQ, 3, 6}, {LatticeKind::TRI, 4, 4}, {LatticeKind::HEX, 4, 4},
                          {LatticeKind::KING, 4, 4}, {LatticeKind::LADDER, 2, 6}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& c : cases) {
        PeriodicPattern p;
        if (c.lattice == LatticeKind::LADDER) {
            p = ladder_pattern();
        } else {
            const auto found = search_min_pattern(c.lattice, c.max_pr, c.max_pc, 4);
            if (!found) return {false, std::string(lattice_name(c.lattice)) + ": search found nothing"};
            p = *found;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const auto cert = certify_pattern(p);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto density = pattern_density(p);
        const bool this_ok = cert.ok && density == quoted_upper_bound(c.lattice) &&
                             density >= density_lower_bound(c.lattice) && secs < 10.0;
        ok = ok && this_ok;
        d << (d.tellp() ? ", " : "") << lattice_name(c.lattice) << " " << density.str() << (this_ok ? "" : " FAILED");
    }
    return {ok, d.str()};
}

Result cubic_lower_bound() {
    std::size_t solved = 0, below = 0, unproved = 0;
    for (const auto& g : cubic_corpus()) {
        const auto r = exact_min(g, Variant::ERR_LD);
        unproved += !r.proved_optimal;
        below += r.optimum * 4 < 3 * g.order();
        ++solved;
    }
    const auto pet = exact_min(make_family(Family::Petersen), Variant::ERR_LD).optimum;
    return {below == 0 && unproved == 0 && pet >= 8 && solved > 0,
            std::to_string(solved) + " twin-free cubic graphs (n <= 12), below ceil(3n/4): " + std::to_string(below) +
                ", Petersen " + std::to_string(pet) + " >= 8"};
}

Result tree_construction() {
    const auto t = build_tree3_errld(6);
    std::size_t interior = 0, exact = 0;
    t.interior.for_each([&](VertexId v) {
        ++interior;
        exact += domination_count(t.graph, t.detectors, v) == 3;
    });
    const double gap = std::abs(t.interior_density.value() - 0.75);
    return {t.interior_verdict.ok && exact == interior && gap <= 0.05,
            std::to_string(interior) + " interior vertices, exactly 3-dominated " + std::to_string(exact) +
                ", density " + t.interior_density.str()};
}

Result localization() {
    const auto pet = make_family(Family::Petersen);
    std::vector<VertexId> rest{1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto a = exhaustive_sweep(pet, VertexSet::of(10, rest), 4);
    const auto c5 = make_family(Family::Cycle, 5);
    const auto b = exhaustive_sweep(c5, VertexSet::full(5), 4);
    const bool sweeps = a.scenarios == 209 && a.correct == 209 && a.disagreements == 0 && b.scenarios == 66 &&
                        b.correct == 66 && b.disagreements == 0;

    std::size_t single = 0, witnessed = 0;
    std::vector<Graph> graphs{pet, make_family(Family::Cycle, 6), make_family(Family::Cycle, 7)};
    for (const auto& g : small_corpus())
        if (g.order() <= 6) graphs.push_back(g);
    for (const auto& g : graphs) {
        const auto n = g.order();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            const auto s = subset(n, mask);
            const auto verdict = verify(g, s, Variant::ERR_LD);
            if (verdict.violations.size() != 1) continue;
            ++single;
            const auto w = failure_witness(g, s, verdict.violations[0]);
            witnessed += w && w->first.intruder != w->second.intruder && simulate(g, s, w->first) == simulate(g, s, w->second);
        }
    }
    return {sweeps && single > 0 && witnessed == single,
            "Petersen " + std::to_string(a.correct) + "/" + std::to_string(a.scenarios) + ", C5 " +
                std::to_string(b.correct) + "/" + std::to_string(b.scenarios) + ", disagreements " +
                std::to_string(a.disagreements + b.disagreements) + ", witnesses " + std::to_string(witnessed) + "/" +
                std::to_string(single) + " single-violation sets"};
}

// Greedy packing scanning vertices from `start` cyclically.
VertexSet rotated_packing(const Graph& g, VertexId start) {
    const auto n = g.order();
    VertexSet packing(n), blocked(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = static_cast<VertexId>((start + k) % n);
        if (blocked.contains(v)) continue;
        packing.insert(v);
        for (VertexId u : ball(g, v, 4)) blocked.insert(u);
    }
    return packing;
}

Result packing_construction() {
    auto graphs = cubic_corpus();
    std::size_t large = 0;
    for (auto& g : parse_graph6_lines(read_file(data_path("corpus/large.g6")))) graphs.push_back(std::move(g));
    graphs.push_back(make_torus(LatticeKind::HEX, 10, 10));
    std::size_t packings = 0, failures = 0, bound_failures = 0;
    for (const auto& g : graphs) {
        std::vector<VertexSet> all{greedy_distance5_packing(g)};
        for (VertexId s = 1; s < g.order(); ++s) all.push_back(rotated_packing(g, s));
        for (const auto& p : all) {
            ++packings;
            try {
                const auto s = packing_complement(g, p);
                failures += !verify(g, s, Variant::ERR_LD).ok;
                if (g.order() >= 46) bound_failures += s.size() > (45 * g.order() + 45) / 46;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        large += g.order() >= 46;
    }
    return {failures == 0 && bound_failures == 0 && large > 0,
            std::to_string(graphs.size()) + " cubic graphs, " + std::to_string(packings) + " greedy packings, failures " +
                std::to_string(failures) + ", ceil(45n/46) checked on " + std::to_string(large) +
                " graphs with n >= 46, exceeded " + std::to_string(bound_failures)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Result()>> criteria[] = {
        {"Petersen optima", petersen_values},
        {"brute-force oracle equivalence", brute_force_equivalence},
        {"characterization vs code distance", code_distance_equivalence},
        {"existence condition", existence},
        {"hierarchy chain", hierarchy},
        {"reduction round trip", reduction_roundtrip},
        {"grid certifications", grid_certifications},
        {"cubic lower bound", cubic_lower_bound},
        {"tree construction", tree_construction},
        {"localization sweep", localization},
        {"packing construction", packing_construction},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !r.ok;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << secs;
        std::cout << (r.ok ? "PASS" : "FAIL") << " " << index << " " << name << ": " << r.detail << " [" << time.str()
                  << " s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "faultdom/error.hpp"
#include "faultdom/families.hpp"
#include "faultdom/grids.hpp"
#include "faultdom/io.hpp"
#include "faultdom/localization.hpp"
#include "faultdom/reduction.hpp"
#include "faultdom/solver.hpp"
#include "faultdom/verify.hpp"

using namespace faultdom;

namespace {

constexpr const char* kVersion = "faultdom 1.0.0";

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct GraphInput {
    std::string file;
    std::string family;
    std::string labels;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("-g,--graph", file, "Edge-list file");
        auto* f = cmd->add_option("--family", family, "Named family, e.g. petersen, cycle:5, torus:SQ:6:6");
        g->excludes(f);
        cmd->add_option("--labels", labels, "Label sidecar file (index label per line)");
    }

    Graph load() const {
        if (file.empty() == family.empty()) throw InputError("give exactly one of -g/--graph or --family");
        Graph g = file.empty() ? make_family(family) : parse_edge_list(read_file(file));
        if (!labels.empty()) g = apply_labels(g, read_file(labels));
        return g;
    }
};

std::size_t default_jobs() {
    const char* env = std::getenv("FAULTDOM_JOBS");
    if (env == nullptr || *env == '\0') return 1;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string_view(env).size() || value == 0) throw InputError("FAULTDOM_JOBS must be a positive integer");
    return value;
}

VertexId parse_vertex(const Graph& g, const std::string& text) {
    if (auto v = g.find_label(text)) return *v;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value >= g.order()) throw InputError("unknown vertex '" + text + "'");
    return static_cast<VertexId>(value);
}

Scenario parse_scenario(const Graph& g, const std::string& intruder, const std::string& fault) {
    Scenario sc;
    if (intruder != "none") sc.intruder = parse_vertex(g, intruder);
    if (!fault.empty() && fault != "none") {
        const auto colon = fault.rfind(':');
        if (colon == std::string::npos) throw InputError("fault must be detector:symbol");
        const auto symbol = fault.substr(colon + 1);
        if (symbol != "0" && symbol != "1" && symbol != "2") throw InputError("fault symbol must be 0, 1 or 2");
        sc.fault = Fault{parse_vertex(g, fault.substr(0, colon)), static_cast<Symbol>(symbol[0] - '0')};
    }
    return sc;
}

SearchConfig search_config(std::uint64_t budget, double seconds, std::size_t jobs) {
    SearchConfig c;
    if (budget > 0) c.node_budget = budget;
    if (seconds > 0) c.time_budget = seconds;
    c.parallel_width = static_cast<unsigned>(jobs);
    return c;
}

std::filesystem::path sibling(const std::filesystem::path& out, const std::string& ext) {
    auto p = out;
    p.replace_extension(ext);
    return p;
}

// Fundamental cell of the pattern with `margin` cells of lattice around it.
std::string pattern_dot(const PeriodicPattern& p, std::size_t margin) {
    const bool ladder = p.lattice == LatticeKind::LADDER;
    const std::size_t row_margin = ladder ? 0 : margin + (margin % 2);
    const std::size_t col_margin = margin + (margin % 2);
    const std::size_t rows = ladder ? 2 : p.pr + 2 * row_margin;
    const std::size_t cols = p.pc + 2 * col_margin;
    const auto g = make_window(p.lattice, rows, cols);
    std::vector<VertexId> on;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const Cell cell{(r + p.pr * rows - row_margin) % p.pr, (c + p.pc * cols - col_margin) % p.pc};
            if (std::binary_search(p.offsets.begin(), p.offsets.end(), cell)) on.push_back(static_cast<VertexId>(r * cols + c));
        }
    const auto s = VertexSet::of(g.order(), on);
    return to_dot(g, &s, lattice_name(p.lattice));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Error-correcting locating-dominating sets: verify, solve, reduce, certify, simulate"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    std::size_t jobs = 0;
    app.add_flag("-q,--quiet", quiet, "Suppress the version banner on stderr");
    app.add_option("-j,--jobs", jobs, "Worker threads (default: FAULTDOM_JOBS or 1)")->check(CLI::PositiveNumber);

    GraphInput gin;
    std::string set_file, variant_text = "err", cnf_file, out_file, pattern_file, intruder = "none", fault;
    std::string lattice_text = "SQ";
    std::uint64_t budget = 0;
    double seconds = 0;
    bool full_scan = false;
    std::size_t max_rows = 3, max_cols = 3, margin = 2;

    auto* verify_cmd = app.add_subcommand("verify", "Check a detector set against a variant");
    gin.attach(verify_cmd);
    verify_cmd->add_option("-s,--set", set_file, "Detector-set file")->required();
    verify_cmd->add_option("--variant", variant_text, "LD, RED_LD, DET_LD or ERR_LD (short: ld/red/det/err)");
    verify_cmd->add_flag("--full-scan", full_scan, "Check every vertex pair");

    auto* solve_cmd = app.add_subcommand("solve", "Exact minimum set by branch and bound");
    gin.attach(solve_cmd);
    solve_cmd->add_option("--variant", variant_text, "Variant");
    solve_cmd->add_option("--budget", budget, "Node budget");
    solve_cmd->add_option("--time", seconds, "Time budget in seconds");

    auto* exists_cmd = app.add_subcommand("exists", "Whether any set of the variant exists");
    gin.attach(exists_cmd);
    exists_cmd->add_option("--variant", variant_text, "Variant");

    auto* reduce_cmd = app.add_subcommand("reduce", "Build the 3-SAT reduction graph");
    reduce_cmd->add_option("-f,--formula", cnf_file, "DIMACS CNF file")->required();
    reduce_cmd->add_option("-o,--out", out_file, "Edge-list output (labels and mandatory set written alongside)");

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Satisfiability against the reduction optimum");
    roundtrip_cmd->add_option("-f,--formula", cnf_file, "DIMACS CNF file")->required();
    roundtrip_cmd->add_option("--budget", budget, "Node budget");
    roundtrip_cmd->add_option("--time", seconds, "Time budget in seconds");

    auto* certify_cmd = app.add_subcommand("grid-certify", "Certify a periodic pattern on its torus");
    certify_cmd->add_option("-p,--pattern", pattern_file, "Pattern file")->required();

    auto* search_cmd = app.add_subcommand("grid-search", "Minimum-density certified periodic pattern");
    search_cmd->add_option("--lattice", lattice_text, "SQ, TRI, HEX, KING or LADDER");
    search_cmd->add_option("--max-rows", max_rows, "Largest cell row period")->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-cols", max_cols, "Largest cell column period")->check(CLI::PositiveNumber);

    auto* simulate_cmd = app.add_subcommand("simulate", "Detector transmissions for one scenario");
    gin.attach(simulate_cmd);
    simulate_cmd->add_option("-s,--set", set_file, "Detector-set file")->required();
    simulate_cmd->add_option("--intruder", intruder, "Vertex index or label, or none");
    simulate_cmd->add_option("--fault", fault, "detector:symbol, or none");

    std::string transmissions_file;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a transmission file");
    gin.attach(decode_cmd);
    decode_cmd->add_option("-s,--set", set_file, "Detector-set file")->required();
    decode_cmd->add_option("-t,--transmissions", transmissions_file, "detector:symbol lines")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Decode every single-fault scenario");
    gin.attach(sweep_cmd);
    sweep_cmd->add_option("-s,--set", set_file, "Detector-set file")->required();

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a graph or a pattern cell");
    gin.attach(dot_cmd);
    dot_cmd->add_option("-s,--set", set_file, "Detector-set file");
    dot_cmd->add_option("-p,--pattern", pattern_file, "Pattern file (cell plus margin)");
    dot_cmd->add_option("--margin", margin, "Cells of margin around a pattern cell");
    dot_cmd->add_option("-o,--out", out_file, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    if (!quiet) std::cerr << kVersion << "\n";

    try {
        if (jobs == 0) jobs = default_jobs();
        const auto load_set = [&](const Graph& g) { return parse_detector_set(read_file(set_file), g.order()); };

        if (verify_cmd->parsed()) {
            const auto g = gin.load();
            VerifyOptions options;
            options.full_pair_scan = full_scan;
            const auto verdict = verify(g, load_set(g), parse_variant(variant_text), options);
            std::cout << format_verdict(verdict);
            return verdict.ok ? kOk : kNegative;
        }
        if (solve_cmd->parsed()) {
            const auto g = gin.load();
            const auto variant = parse_variant(variant_text);
            try {
                std::cout << format_solve_result(exact_min(g, variant, search_config(budget, seconds, jobs)));
            } catch (const NoSolutionError& e) {
                std::cout << "NO_SOLUTION " << variant_name(variant) << "\n";
                std::cerr << e.what() << "\n";
                return kNegative;
            }
            return kOk;
        }
        if (exists_cmd->parsed()) {
            const auto g = gin.load();
            const auto variant = parse_variant(variant_text);
            const bool yes = variant_exists(g, variant);
            std::cout << (yes ? "EXISTS " : "NO_SOLUTION ") << variant_name(variant) << "\n";
            if (!yes && variant == Variant::ERR_LD) {
                if (g.min_degree() < 2) std::cout << "min_degree " << g.min_degree() << "\n";
                for (auto [u, v] : find_twins(g)) std::cout << "twins " << u << " " << v << "\n";
            }
            return yes ? kOk : kNegative;
        }
        if (reduce_cmd->parsed()) {
            const auto r = build_reduction(parse_cnf(read_file(cnf_file)));
            const auto edges = format_edge_list(r.graph);
            if (out_file.empty()) {
                std::cout << edges;
                return kOk;
            }
            write_file(out_file, edges);
            write_file(sibling(out_file, ".labels"), format_labels(r.graph));
            write_file(sibling(out_file, ".mandatory.ds"), format_detector_set(r.mandatory));
            std::cout << "REDUCED vertices " << r.graph.order() << " edges " << r.graph.size() << " mandatory "
                      << r.mandatory.size() << "\n";
            return kOk;
        }
        if (roundtrip_cmd->parsed()) {
            const auto r = roundtrip_check(parse_cnf(read_file(cnf_file)), search_config(budget, seconds, jobs));
            const char* status = r.status == RoundtripStatus::Pass ? "PASS"
                                 : r.status == RoundtripStatus::Fail ? "FAIL"
                                                                      : "INDETERMINATE";
            std::cout << status << " sat " << (r.satisfiable ? 1 : 0) << " threshold " << r.threshold << " optimum "
                      << r.optimum << (r.proved ? " proved" : " unproved") << "\n";
            return r.status == RoundtripStatus::Pass ? kOk : kNegative;
        }
        if (certify_cmd->parsed()) {
            const auto p = parse_pattern(read_file(pattern_file));
            const auto c = certify_pattern(p);
            std::cout << (c.ok ? "OK" : "FAIL") << " density " << pattern_density(p).str() << " torus " << c.rows << "x"
                      << c.cols << "\n";
            if (!c.ok) std::cout << format_verdict(c.verdict);
            return c.ok ? kOk : kNegative;
        }
        if (search_cmd->parsed()) {
            const auto lattice = parse_lattice(lattice_text);
            const auto best = search_min_pattern(lattice, max_rows, max_cols, jobs);
            if (!best) {
                std::cout << "NONE " << lattice_name(lattice) << "\n";
                return kNegative;
            }
            std::cout << "FOUND density " << pattern_density(*best).str() << " cell " << best->pr << "x" << best->pc
                      << "\n"
                      << format_pattern(*best);
            return kOk;
        }
        if (simulate_cmd->parsed()) {
            const auto g = gin.load();
            const auto s = load_set(g);
            std::cout << format_transmissions(simulate(g, s, parse_scenario(g, intruder, fault)));
            return kOk;
        }
        if (decode_cmd->parsed()) {
            const auto g = gin.load();
            const auto s = load_set(g);
            const auto o = parse_transmissions(read_file(transmissions_file));
            const auto a = decode_elimination(g, s, o);
            const auto b = decode_consistency(g, s, o);
            std::cout << format_decode(g, a);
            if (!(a == b)) {
                std::cout << "DISAGREE consistency " << format_decode(g, b);
                return kNegative;
            }
            return kOk;
        }
        if (sweep_cmd->parsed()) {
            const auto g = gin.load();
            const auto s = load_set(g);
            const auto verdict = verify(g, s, Variant::ERR_LD);
            if (!verdict.ok) {
                std::cout << "NOT_ERR_LD\n" << format_verdict(verdict);
                if (auto w = failure_witness(g, s, verdict.violations.front())) {
                    std::cout << "WITNESS " << format_scenario(g, w->first) << "\n"
                              << "WITNESS " << format_scenario(g, w->second) << "\n"
                              << format_transmissions(simulate(g, s, w->first));
                }
                return kNegative;
            }
            const auto report = exhaustive_sweep(g, s, jobs);
            std::cout << format_sweep(report);
            for (const auto& sc : report.failures) std::cout << "FAILED " << format_scenario(g, sc) << "\n";
            return report.correct == report.scenarios && report.disagreements == 0 ? kOk : kNegative;
        }
        if (dot_cmd->parsed()) {
            std::string dot;
            if (!pattern_file.empty()) {
                if (!gin.file.empty() || !gin.family.empty()) throw InputError("give a graph or a pattern, not both");
                dot = pattern_dot(parse_pattern(read_file(pattern_file)), margin);
            } else {
                const auto g = gin.load();
                if (set_file.empty()) {
                    dot = to_dot(g);
                } else {
                    const auto s = load_set(g);
                    dot = to_dot(g, &s);
                }
            }
            if (out_file.empty()) std::cout << dot;
            else write_file(out_file, dot);
            return kOk;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NoSolutionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    }
    return kUsage;
}

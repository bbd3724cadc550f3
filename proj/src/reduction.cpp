#include "faultdom/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "faultdom/error.hpp"
#include "faultdom/io.hpp"
#include "faultdom/verify.hpp"

namespace faultdom {

namespace {

constexpr std::string_view kBattery[] = {
    "p cnf 3 1\n1 2 3 0\n",
    "p cnf 5 4\n1 2 3 0\n1 2 -3 0\n2 -4 5 0\n2 -4 -5 0\n",
    "p cnf 3 4\n1 -2 3 0\n-1 2 -3 0\n1 2 -3 0\n-1 -2 3 0\n",
    "p cnf 4 4\n1 2 3 0\n1 2 4 0\n1 3 4 0\n-1 -2 -4 0\n",
    "p cnf 4 3\n-1 -2 -3 0\n-1 -2 -4 0\n-1 3 4 0\n",
};

std::vector<CnfFormula> battery() {
    std::vector<CnfFormula> out;
    for (auto text : kBattery) out.push_back(parse_cnf(text));
    return out;
}

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<Edge> slots_among(std::initializer_list<VertexId> vs, std::initializer_list<Edge> skip) {
    std::vector<VertexId> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> out;
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b) {
            const Edge e{sorted[a], sorted[b]};
            if (std::find(skip.begin(), skip.end(), e) == skip.end()) out.push_back(e);
        }
    return out;
}

std::vector<std::vector<Edge>> enumerate(const std::vector<Edge>& fixed, const std::vector<Edge>& slots,
                                         std::size_t total, auto&& keep) {
    std::vector<std::vector<Edge>> out;
    const std::size_t extra = total - fixed.size();
    std::vector<int> idx(extra);
    for (std::size_t i = 0; i < extra; ++i) idx[i] = static_cast<int>(i);
    do {
        std::vector<Edge> edges = fixed;
        for (int i : idx) edges.push_back(slots[static_cast<std::size_t>(i)]);
        if (keep(edges)) out.push_back(std::move(edges));
    } while (next_combination(idx, static_cast<int>(slots.size())));
    return out;
}

// Degree-2 closed neighbourhoods must cover exactly `mandatory`; `bonus`
// adds external degree (the clause vertex's three literal edges).
bool forcing_ok(std::size_t n, const std::vector<Edge>& edges, const VertexSet& mandatory, VertexId bonus_vertex,
                std::size_t bonus) {
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    VertexSet covered(n);
    for (VertexId v = 0; v < n; ++v) {
        const std::size_t deg = adj[v].size() + (v == bonus_vertex ? bonus : 0);
        if (deg < 2) return false;
        if (deg != 2) continue;
        covered.insert(v);
        for (VertexId w : adj[v]) covered.insert(w);
    }
    return covered == mandatory;
}

bool names_vertex(const Violation& v, VertexId x) {
    return std::find(v.witnesses.begin(), v.witnesses.end(), x) != v.witnesses.end();
}

// The gadget on its own: with only mandatory detectors each violation is
// `expected` and one has exactly the `required` witnesses; for F, adding
// either literal must leave no violation.
bool gadget_alone_ok(std::size_t n, const std::vector<Edge>& edges, const VertexSet& mandatory, auto&& expected,
                     const std::vector<VertexId>& required) {
    const auto g = Graph::from_edges(n, edges);
    VerifyOptions all;
    all.max_violations = SIZE_MAX;
    const auto base = verify(g, mandatory, Variant::ERR_LD, all);
    if (!std::all_of(base.violations.begin(), base.violations.end(), expected)) return false;
    if (std::none_of(base.violations.begin(), base.violations.end(),
                     [&](const Violation& v) { return v.witnesses == required; }))
        return false;
    if (mandatory.contains(0)) return true;
    for (VertexId lit : {0u, 1u}) {
        VertexSet s = mandatory;
        s.insert(lit);
        if (!verify(g, s, Variant::ERR_LD, all).ok) return false;
    }
    return true;
}

}  // namespace

CnfFormula parse_cnf(std::string_view text) {
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<Literal> pending;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string kind;
            long long n = -1, m = -1;
            if (header || !(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
                throw InputError("cnf: malformed header '" + line + "'");
            header = true;
            f.num_vars = static_cast<std::size_t>(n);
            declared = static_cast<std::size_t>(m);
            continue;
        }
        if (!header) throw InputError("cnf: clause before 'p cnf' header");
        ls.clear();
        ls.str(line);
        while (ls >> tok) {
            long long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw InputError("cnf: bad literal '" + tok + "'");
            }
            if (lit != 0) {
                const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
                if (var > f.num_vars) throw InputError("cnf: variable " + std::to_string(var) + " exceeds header");
                pending.push_back({static_cast<std::uint32_t>(var), lit < 0});
                continue;
            }
            if (pending.size() != 3)
                throw InputError("cnf: clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                 std::to_string(pending.size()) + " literals, expected 3");
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b)
                    if (pending[a].var == pending[b].var)
                        throw InputError("cnf: clause " + std::to_string(f.clauses.size() + 1) +
                                         " repeats variable " + std::to_string(pending[a].var));
            f.clauses.push_back({pending[0], pending[1], pending[2]});
            pending.clear();
        }
    }
    if (!header) throw InputError("cnf: missing 'p cnf' header");
    if (!pending.empty()) throw InputError("cnf: last clause is not terminated by 0");
    if (f.clauses.size() != declared)
        throw InputError("cnf: header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    if (f.clauses.empty() || f.num_vars == 0) throw InputError("cnf: formula has no clauses");
    return f;
}

std::string format_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const auto& l : c) out << (l.negated ? "-" : "") << l.var << ' ';
        out << "0\n";
    }
    return out.str();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (assignment.size() != f.num_vars) throw InputError("assignment does not cover every variable");
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return assignment[l.var - 1] != l.negated; });
    });
}

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f) {
    if (f.num_vars > 24) throw InputError("brute-force satisfiability limited to 24 variables");
    std::vector<bool> a(f.num_vars);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
        for (std::size_t i = 0; i < f.num_vars; ++i) a[i] = (mask >> i) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

GadgetSpec parse_gadget_spec(std::string_view text) {
    GadgetSpec spec;
    bool versioned = false;
    for (const auto& line : content_lines(text)) {
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "version") {
            if (!(in >> spec.version)) throw InputError("gadgets: bad version line");
            versioned = true;
            continue;
        }
        VertexId u = 0, v = 0;
        if ((tag != "F" && tag != "H") || !(in >> u >> v)) throw InputError("gadgets: bad line '" + line + "'");
        const std::size_t order = tag == "F" ? kFOrder : kHOrder;
        if (u >= order || v >= order || u == v) throw InputError("gadgets: bad edge '" + line + "'");
        (tag == "F" ? spec.f_edges : spec.h_edges).emplace_back(u, v);
    }
    if (!versioned) throw InputError("gadgets: missing version");
    if (spec.f_edges.size() != kFEdges || spec.h_edges.size() != kHEdges)
        throw InputError("gadgets: expected 15 F edges and 9 H edges");
    return spec;
}

std::string format_gadget_spec(const GadgetSpec& spec) {
    std::ostringstream out;
    out << "version " << spec.version << '\n';
    for (auto [u, v] : spec.f_edges) out << "F " << u << ' ' << v << "  # " << kFNames[u] << '-' << kFNames[v] << '\n';
    for (auto [u, v] : spec.h_edges) out << "H " << u << ' ' << v << "  # " << kHNames[u] << '-' << kHNames[v] << '\n';
    return out.str();
}

ReductionGraph build_reduction(const CnfFormula& f, const GadgetSpec& gadgets) {
    if (f.clauses.empty() || f.num_vars == 0) throw InputError("reduction needs at least one clause");
    const std::size_t n = kFOrder * f.num_vars + kHOrder * f.clauses.size();
    if (n > kMaxVertices) throw InputError("formula too large for the reduction");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    labels.reserve(n);
    ReductionGraph r;

    for (std::size_t i = 0; i < f.num_vars; ++i) {
        const auto base = static_cast<VertexId>(kFOrder * i);
        for (auto [u, v] : gadgets.f_edges) edges.emplace_back(base + u, base + v);
        for (auto name : kFNames) labels.push_back(std::string(name) + "_" + std::to_string(i + 1));
        r.literals.emplace_back(base, base + 1);
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto base = static_cast<VertexId>(kFOrder * f.num_vars + kHOrder * j);
        for (auto [u, v] : gadgets.h_edges) edges.emplace_back(base + u, base + v);
        for (auto name : kHNames) labels.push_back(std::string(name) + "_" + std::to_string(j + 1));
        r.clause_vertices.push_back(base);
        for (const auto& lit : f.clauses[j]) {
            const auto [pos, neg] = r.literals[lit.var - 1];
            edges.emplace_back(base, lit.negated ? neg : pos);
        }
    }
    r.graph = Graph::from_edges(n, edges, std::move(labels));
    r.mandatory = DetectorSet::all(n);
    for (auto [pos, neg] : r.literals) {
        r.mandatory.erase(pos);
        r.mandatory.erase(neg);
    }
    return r;
}

DetectorSet assignment_to_set(const ReductionGraph& r, const std::vector<bool>& assignment) {
    if (assignment.size() != r.literals.size())
        throw InputError("assignment covers " + std::to_string(assignment.size()) + " of " +
                         std::to_string(r.literals.size()) + " variables");
    DetectorSet s = r.mandatory;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        s.insert(assignment[i] ? r.literals[i].first : r.literals[i].second);
    return s;
}

GadgetCheck check_gadgets(const GadgetSpec& spec, bool quick) {
    auto fail = [](std::string why) { return GadgetCheck{false, std::move(why)}; };
    if (spec.f_edges.size() != kFEdges || spec.h_edges.size() != kHEdges) return fail("edge counts");
    VerifyOptions all;
    all.max_violations = SIZE_MAX;
    std::size_t index = 0;
    for (const auto& f : battery()) {
        const std::string tag = "formula " + std::to_string(++index) + ": ";
        ReductionGraph r;
        try {
            r = build_reduction(f, spec);
        } catch (const InputError& e) {
            return fail(tag + e.what());
        }
        const std::size_t N = f.num_vars, M = f.clauses.size();
        const auto& g = r.graph;
        if (g.order() != 11 * N + 8 * M || g.size() != 15 * N + 12 * M || r.mandatory.size() != 9 * N + 8 * M)
            return fail(tag + "count invariants");

        auto yz = [&](std::size_t i) {
            const VertexId base = static_cast<VertexId>(kFOrder * i);
            return std::vector<VertexId>{base + 2, base + 3};
        };
        auto inside_one_f = [&](const Violation& v) {
            const auto block = v.witnesses.front() / kFOrder;
            return std::all_of(v.witnesses.begin(), v.witnesses.end(),
                               [&](VertexId w) { return w < kFOrder * N && w / kFOrder == block; });
        };
        const auto base = verify(g, r.mandatory, Variant::ERR_LD, all);
        for (const auto& v : base.violations) {
            bool named = inside_one_f(v);
            for (VertexId c : r.clause_vertices) named = named || names_vertex(v, c);
            if (!named) return fail(tag + "mandatory-only violation outside variable gadgets and clause vertices");
        }
        for (std::size_t i = 0; i < N; ++i)
            if (std::none_of(base.violations.begin(), base.violations.end(),
                             [&](const Violation& v) { return v.witnesses == yz(i); }))
                return fail(tag + "y/z distinguished without a literal");
        for (VertexId c : r.clause_vertices)
            if (std::none_of(base.violations.begin(), base.violations.end(),
                             [&](const Violation& v) { return names_vertex(v, c); }))
                return fail(tag + "clause vertex satisfied without a literal");

        std::vector<bool> a(N);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
            for (std::size_t i = 0; i < N; ++i) a[i] = (mask >> i) & 1;
            const auto verdict = verify(g, assignment_to_set(r, a), Variant::ERR_LD, all);
            if (verdict.ok != satisfies(f, a)) return fail(tag + "assignment soundness");
            for (std::size_t j = 0; j < M; ++j) {
                const auto& cl = f.clauses[j];
                const bool sat = std::any_of(cl.begin(), cl.end(), [&](const Literal& l) { return a[l.var - 1] != l.negated; });
                const VertexId c = r.clause_vertices[j];
                const bool flagged = std::any_of(verdict.violations.begin(), verdict.violations.end(),
                                                 [&](const Violation& v) { return names_vertex(v, c); });
                if (sat == flagged) return fail(tag + "clause repair does not track the assignment");
            }
            for (const auto& v : verdict.violations) {
                bool named = false;
                for (VertexId c : r.clause_vertices) named = named || names_vertex(v, c);
                if (!named) return fail(tag + "violation not tied to a clause under an assignment");
            }
        }
        if (quick) break;
    }
    return {};
}

std::optional<GadgetSpec> search_gadgets(GadgetSearchStats* stats) {
    GadgetSearchStats local;
    auto& st = stats ? *stats : local;

    const std::vector<Edge> f_fixed{{0, 2}, {1, 3}, {2, 4}, {3, 4}, {5, 7}, {5, 8}, {6, 9}, {6, 10}};
    const auto f_slots = slots_among({0, 1, 2, 3, 7, 8, 9, 10}, {{0, 2}, {1, 3}});
    VertexSet f_mandatory = VertexSet::full(kFOrder);
    f_mandatory.erase(0);
    f_mandatory.erase(1);
    const auto f_list = enumerate(f_fixed, f_slots, kFEdges, [&](const std::vector<Edge>& edges) {
        if (!forcing_ok(kFOrder, edges, f_mandatory, 0, 0)) return false;
        for (VertexId lit : {0u, 1u}) {
            int mandatory_nbrs = 0;
            for (auto [u, v] : edges) {
                if (u == lit && v > 1) ++mandatory_nbrs;
                if (v == lit && u > 1) ++mandatory_nbrs;
            }
            if (mandatory_nbrs < 3) return false;
        }
        return gadget_alone_ok(kFOrder, edges, f_mandatory, [](const Violation&) { return true; }, {2, 3});
    });

    const std::vector<Edge> h_fixed{{0, 1}, {1, 2}};
    const auto h_slots = slots_among({0, 2, 3, 4, 5, 6, 7}, {});
    const VertexSet h_all = VertexSet::full(kHOrder);
    const auto h_list = enumerate(h_fixed, h_slots, kHEdges, [&](const std::vector<Edge>& edges) {
        return forcing_ok(kHOrder, edges, h_all, 0, 3) &&
               gadget_alone_ok(kHOrder, edges, h_all, [](const Violation& v) { return names_vertex(v, 0); }, {0, 1});
    });
    st.f_candidates = f_list.size();
    st.h_candidates = h_list.size();

    for (const auto& fe : f_list)
        for (const auto& he : h_list) {
            GadgetSpec spec{1, fe, he};
            ++st.pairs_checked;
            if (check_gadgets(spec, true).ok && check_gadgets(spec).ok) return spec;
        }
    return std::nullopt;
}

RoundtripResult roundtrip_check(const CnfFormula& f, const SearchConfig& config) {
    RoundtripResult out;
    const auto witness = brute_force_sat(f);
    out.satisfiable = witness.has_value();
    out.threshold = 10 * f.num_vars + 8 * f.clauses.size();
    const auto r = build_reduction(f);
    SearchConfig cfg = config;
    if (witness) cfg.hint = assignment_to_set(r, *witness);
    const auto solved = exact_min(r.graph, Variant::ERR_LD, cfg);
    out.optimum = solved.optimum;
    out.proved = solved.proved_optimal;
    if (out.satisfiable) {
        if (out.optimum < out.threshold)
            out.status = RoundtripStatus::Fail;
        else
            out.status = out.proved ? RoundtripStatus::Pass : RoundtripStatus::Indeterminate;
    } else {
        if (out.optimum <= out.threshold)
            out.status = RoundtripStatus::Fail;
        else
            out.status = out.proved ? RoundtripStatus::Pass : RoundtripStatus::Indeterminate;
    }
    return out;
}

}  // namespace faultdom

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultdom/graph.hpp"
#include "faultdom/solver.hpp"
#include "faultdom/vertex_set.hpp"

namespace faultdom {

struct Literal {
    std::uint32_t var;  // 1-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<Clause> clauses;
};

/// DIMACS CNF restricted to 3 literals over distinct variables per clause.
/// Clauses may span lines; `c` lines are comments; `%` ends the input.
CnfFormula parse_cnf(std::string_view text);
std::string format_cnf(const CnfFormula& f);

/// assignment[i] is the value of variable i+1.
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

/// First satisfying assignment in binary counting order (variable 1 is the
/// lowest bit), or nullopt. Throws InputError for more than 24 variables.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f);

/// Variable gadget F (11 vertices, 15 edges) and clause gadget H (8 vertices,
/// 9 edges; the clause vertex also gets one edge to each of its 3 literals).
///
/// F vertex 0 is the positive literal x, 1 the negative literal, 2 and 3 are
/// y and z. H vertex 0 is the clause vertex c and 1 is d. Every vertex except
/// the two literals is mandatory: it is the closed neighbourhood of some
/// degree-2 vertex, so 3-domination forces it into any ERR_LD set.
struct GadgetSpec {
    int version = 0;
    std::vector<Edge> f_edges;
    std::vector<Edge> h_edges;
};

inline constexpr std::size_t kFOrder = 11;
inline constexpr std::size_t kHOrder = 8;
inline constexpr std::size_t kFEdges = 15;
inline constexpr std::size_t kHEdges = 9;

/// Vertex names inside a gadget (suffixed with the variable / clause index).
inline constexpr std::array<std::string_view, kFOrder> kFNames{"x", "xbar", "y", "z", "w1", "w2",
                                                              "w3", "u1", "u2", "u3", "u4"};
inline constexpr std::array<std::string_view, kHOrder> kHNames{"c", "d", "h1", "h2", "h3", "h4", "h5", "h6"};

/// The shipped gadgets (found by search_gadgets and frozen).
const GadgetSpec& frozen_gadgets();

/// Text form: "version V", then "F u v" and "H u v" edge lines.
GadgetSpec parse_gadget_spec(std::string_view text);
std::string format_gadget_spec(const GadgetSpec& spec);

struct ReductionGraph {
    Graph graph;
    DetectorSet mandatory;
    /// (x_i, xbar_i) per variable.
    std::vector<std::pair<VertexId, VertexId>> literals;
    /// c_j per clause.
    std::vector<VertexId> clause_vertices;
};

/// F_1..F_N blocks (11 vertices each) followed by H_1..H_M (8 each); c_j is
/// joined to the literal vertices of its clause. Labels "x_1", "xbar_1",
/// "y_1", ..., "c_1", "d_1", "h1_1", ...
ReductionGraph build_reduction(const CnfFormula& f, const GadgetSpec& gadgets = frozen_gadgets());

/// Mandatory set plus x_i (true) or xbar_i (false). Throws InputError unless
/// the assignment covers every variable.
DetectorSet assignment_to_set(const ReductionGraph& r, const std::vector<bool>& assignment);

struct GadgetCheck {
    bool ok = true;
    std::string reason;
};

/// Functional checks of a gadget pair on a fixed battery of formulas:
/// count invariants; with only mandatory detectors every failing condition
/// lies inside one variable gadget or names a clause vertex, and every
/// y_i/z_i pair and c_j is among them; for every assignment the remaining
/// failures all name clause vertices, c_j fails iff clause j is false, and
/// the set verifies iff the assignment satisfies the formula.
GadgetCheck check_gadgets(const GadgetSpec& spec, bool quick = false);

struct GadgetSearchStats {
    std::uint64_t f_candidates = 0;
    std::uint64_t h_candidates = 0;
    std::uint64_t pairs_checked = 0;
};

/// Enumerates gadget topologies from fixed templates and returns the first
/// pair (F-major, then H, each in lexicographic order of added edge slots)
/// passing check_gadgets.
///
///   F: fixed x-y, xbar-z, w1-y, w1-z, w2-u1, w2-u2, w3-u3, w3-u4 plus 7 of the
///      26 remaining slots among {x, xbar, y, z, u1..u4}.
///   H: fixed c-d, d-h1 plus 7 of the 21 slots among {c, h1..h6}.
///
/// Candidates are pre-filtered: min degree 2, the degree-2 closed
/// neighbourhoods cover exactly the mandatory vertices, each literal has at
/// least 3 mandatory neighbours in F, and each gadget on its own shows the
/// y/z (resp. c/d) failure. An F gadget must verify alone once either
/// literal is added.
std::optional<GadgetSpec> search_gadgets(GadgetSearchStats* stats = nullptr);

enum class RoundtripStatus { Pass, Fail, Indeterminate };

struct RoundtripResult {
    RoundtripStatus status = RoundtripStatus::Indeterminate;
    bool satisfiable = false;
    std::size_t threshold = 0;  // 10N + 8M
    std::size_t optimum = 0;
    bool proved = false;
};

/// Brute-force satisfiability against the exact ERR_LD optimum of the
/// reduction: passes iff (sat and optimum == 10N+8M) or (unsat and
/// optimum > 10N+8M). A budget stop before that is decided is Indeterminate.
RoundtripResult roundtrip_check(const CnfFormula& f, const SearchConfig& config = {});

}  // namespace faultdom

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "faultdom/graph.hpp"
#include "faultdom/verify.hpp"
#include "faultdom/vertex_set.hpp"

namespace faultdom {

struct SearchConfig {
    std::uint64_t node_budget = 200'000'000;
    /// Wall-clock limit in seconds.
    double time_budget = 3600.0;
    /// Worker threads; the optimum does not depend on it, node counts do.
    unsigned parallel_width = 1;
    /// Optional valid set used as the starting incumbent instead of greedy_upper.
    std::optional<DetectorSet> hint;
};

struct SolveResult {
    Variant variant;
    std::size_t optimum = 0;
    DetectorSet witness;
    std::uint64_t nodes_explored = 0;
    /// False when a budget ran out; optimum is then the best incumbent.
    bool proved_optimal = false;
};

/// Minimum-cardinality set of `variant` by branch and bound.
///
/// Vertices are in / out / undecided. Propagation forces detectors when a
/// closed neighbourhood has exactly as many candidates as its domination
/// threshold, and forces endpoint statuses or neighbourhood detectors when a
/// pair condition (pairs within distance 2) has a single feasible completion.
/// The bound is |in| plus the larger of a counting bound on the residual
/// domination demand and the demand over disjoint undecided neighbourhoods.
/// Branching: the vertex with the least domination slack, then its
/// lowest-index undecided neighbour, "in" first.
///
/// Throws NoSolutionError when no set of the variant exists.
SolveResult exact_min(const Graph& g, Variant variant, const SearchConfig& config = {});

/// Verified set grown greedily: first cover domination demand, then add the
/// vertex removing the most violations (lowest index on ties).
DetectorSet greedy_upper(const Graph& g, Variant variant);

/// V - P for a distance-5 packing P of a twin-free cubic graph; the result is
/// re-verified as ERR_LD. Throws InputError naming the first violated
/// precondition (a too-close pair is reported as "u v distance d").
DetectorSet packing_complement(const Graph& g, const VertexSet& packing);

/// Maximal set with pairwise distance >= 5, scanning vertices in index order.
VertexSet greedy_distance5_packing(const Graph& g);

/// "<variant> <optimum> proved|unproved <nodes>" followed by the witness line.
std::string format_solve_result(const SolveResult& r);

}  // namespace faultdom

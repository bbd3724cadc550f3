#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultdom/graph.hpp"
#include "faultdom/simd/bitops.hpp"
#include "faultdom/vertex_set.hpp"

namespace faultdom {

/// Locating-dominating variants, weakest first.
enum class Variant { LD, RED_LD, DET_LD, ERR_LD };

inline constexpr Variant kAllVariants[] = {Variant::LD, Variant::RED_LD, Variant::DET_LD, Variant::ERR_LD};

std::string_view variant_name(Variant v);
/// Accepts "LD", "RED_LD", "DET_LD", "ERR_LD" and the short forms ld/red/det/err.
Variant parse_variant(std::string_view text);
/// Number of numbered conditions in the variant's characterization.
int property_count(Variant v);
std::string_view roman(int property);

/// One failed characterization condition.
///
/// `witnesses` holds one vertex for domination conditions and two (ascending)
/// for pair conditions. `deficit` is how far the measured quantity falls short
/// of its threshold; for the two-way "or" conditions of DET_LD it is the
/// smaller of the two shortfalls.
struct Violation {
    Variant variant;
    int property;
    std::vector<VertexId> witnesses;
    int deficit;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
    bool ok = true;
    std::vector<Violation> violations;
    /// More violations existed than the cap allowed to record.
    bool truncated = false;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct VerifyOptions {
    std::size_t max_violations = 100;
    /// Check every vertex pair instead of the local candidates (see verify).
    bool full_pair_scan = false;
    /// When set, only conditions whose witnesses all lie in `scope` count.
    const VertexSet* scope = nullptr;
};

/// |N[v] & S|
std::size_t domination_count(const Graph& g, const VertexSet& s, VertexId v);

/// |((N(u) & S) ^ (N(v) & S)) - {u, v}|. Throws InputError when u == v.
std::size_t distinguishing_count(const Graph& g, const VertexSet& s, VertexId u, VertexId v);

/// Checks the numbered characterization conditions of `variant`.
///
///   LD      i   every non-detector has a detector neighbour
///           ii  non-detector pairs: |A(u) ^ A(v)| >= 1
///   RED_LD  i   |N[v] & S| >= 2
///           ii  detector v, non-detector u: |(A(v) ^ A(u)) - {v}| >= 1
///           iii non-detector pairs: |A(u) ^ A(v)| >= 2
///   DET_LD  i   |N[v] & S| >= 2
///           ii  detector pairs: |A(u) ^ A(v)| >= 1
///           iii non-detector v, detector u: |A(v) - A(u)| >= 2 or |A(u) - A(v)| >= 1
///           iv  non-detector pairs: |A(v) - A(u)| >= 2 or |A(u) - A(v)| >= 2
///   ERR_LD  i   |N[v] & S| >= 3
///           ii  detector pairs: |(A(u) ^ A(v)) - {u, v}| >= 1
///           iii non-detector v, detector u: |(A(v) ^ A(u)) - {u}| >= 2
///           iv  non-detector pairs: |A(u) ^ A(v)| >= 3
///
/// with A(x) = N(x) & S. Violations are reported in canonical order: all
/// condition-(i) failures by vertex, then pair failures by (u, v)
/// lexicographically.
///
/// By default only pairs at distance <= 2, plus pairs touching a vertex that
/// fails (i), are examined. Any other pair has disjoint open neighbourhoods
/// and neither endpoint in the other's neighbourhood, so its symmetric
/// difference is A(u) + A(v) and condition (i) at both endpoints already meets
/// every pair threshold. `full_pair_scan` checks all pairs and must agree.
Verdict verify(const Graph& g, const VertexSet& s, Variant variant, const VerifyOptions& options = {});

/// ERR_LD via the unified two-condition form:
///   |N[v] & S| >= 3 and, for all u != v,
///   |((N(u) & S) ^ (N(v) & S)) - {u, v}| >= 3 - |{u, v} & S|.
/// Independent second path for cross-checking verify(..., ERR_LD).
bool verify_errld_unified(const Graph& g, const VertexSet& s);

/// An ERR_LD set exists iff min degree >= 2 and the graph is twin-free.
bool errld_exists(const Graph& g);

/// Whether any set of the variant exists (the full vertex set is the most
/// permissive candidate since every variant is closed under supersets).
bool variant_exists(const Graph& g, Variant variant);

/// "OK" or one "VIOLATION <variant> <property> <witnesses...> <deficit>" line
/// per violation.
std::string format_verdict(const Verdict& verdict);

// --- transmissions -------------------------------------------------------

/// Symbol a detector reports: 0 nothing, 1 intruder in N(w), 2 intruder at w.
using Symbol = std::uint8_t;
inline constexpr Symbol kNoIntruder = 0;
inline constexpr Symbol kNeighbour = 1;
inline constexpr Symbol kHere = 2;

/// Observed or expected detector outputs, indexed like `detectors`
/// (ascending vertex order).
struct TransmissionVector {
    std::vector<VertexId> detectors;
    std::vector<Symbol> symbols;

    std::size_t size() const { return detectors.size(); }
    friend bool operator==(const TransmissionVector&, const TransmissionVector&) = default;
};

/// Fault-free outputs for an intruder at `intruder` (nullopt = no intruder).
TransmissionVector expected_transmissions(const Graph& g, const VertexSet& s, std::optional<VertexId> intruder);

std::size_t hamming(const TransmissionVector& a, const TransmissionVector& b);

struct CodeDistance {
    static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
    /// kInfinite when S is empty (no coordinates to compare).
    std::size_t min_distance = kInfinite;
    bool degenerate = false;
};

/// Minimum pairwise Hamming distance over the expected vectors of every
/// intruder position plus "no intruder", compared coordinate by coordinate.
CodeDistance code_min_distance(const Graph& g, const VertexSet& s);

namespace detail {

/// Outcome of one characterization condition: property 0 means satisfied.
struct Check {
    int property = 0;
    int deficit = 0;
};

/// Threshold k of the closed-neighbourhood condition (LD applies it to
/// non-detectors only, with k = 1).
int domination_threshold(Variant variant);

/// Condition (i) at v for detector bits `s`.
Check check_vertex(const Graph& g, simd::Words s, VertexId v, bool v_in, Variant variant);

/// The pair condition for (u, v) with the given memberships; `s` must agree
/// with u_in / v_in at u and v.
Check check_pair(const Graph& g, simd::Words s, VertexId u, bool u_in, VertexId v, bool v_in, Variant variant);

}  // namespace detail

}  // namespace faultdom

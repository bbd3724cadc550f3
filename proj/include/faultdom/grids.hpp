#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faultdom/families.hpp"
#include "faultdom/verify.hpp"

namespace faultdom {

/// Exact non-negative fraction, always reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;
    }
};

using Cell = std::pair<std::size_t, std::size_t>;

/// Detector offsets inside a pr x pc fundamental cell, tiled by translation.
/// Offsets are kept sorted and unique.
struct PeriodicPattern {
    LatticeKind lattice = LatticeKind::SQ;
    std::size_t pr = 1;
    std::size_t pc = 1;
    std::vector<Cell> offsets;

    friend bool operator==(const PeriodicPattern&, const PeriodicPattern&) = default;
};

/// Throws InputError on a zero period, an offset outside the cell, an empty
/// offset list, or a LADDER period whose row count does not divide 2.
PeriodicPattern make_pattern(LatticeKind lattice, std::size_t pr, std::size_t pc, std::vector<Cell> offsets);

/// |offsets| / (pr * pc)
Rational pattern_density(const PeriodicPattern& p);

/// Line 1 "LATTICE pr pc", then one "r c" line per offset; '#' comments.
PeriodicPattern parse_pattern(std::string_view text);
std::string format_pattern(const PeriodicPattern& p);

/// Torus dimensions for certification: the smallest multiples of the period
/// that are at least 5 (HEX: of lcm(period, 2); LADDER: 2 rows and at least
/// 6 columns).
Cell certification_dims(const PeriodicPattern& p);

/// The pattern tiled over a rows x cols torus (dims must be multiples).
DetectorSet tile(const PeriodicPattern& p, std::size_t rows, std::size_t cols);

struct Certification {
    bool ok = false;
    std::size_t rows = 0;
    std::size_t cols = 0;
    Verdict verdict;
};

/// Verifies ERR:LD on the certification torus. Every condition involves
/// vertices within distance 2, and at these dimensions the torus is locally
/// isomorphic to the lattice around any pair at distance <= 2, so ok here
/// implies ok on the infinite lattice.
Certification certify_pattern(const PeriodicPattern& p, const VerifyOptions& options = {});

/// 3 / (degree + 1): every closed neighbourhood needs 3 detectors.
Rational density_lower_bound(LatticeKind lattice);

/// Minimum-density certified pattern over cells pr x pc with pr <= max_pr,
/// pc <= max_pc (LADDER: pr = 2 only). Candidates run in order of density,
/// then cell area, then pr, then lexicographic offsets; offsets sets that
/// are not the least in their translation orbit are skipped.
std::optional<PeriodicPattern> search_min_pattern(LatticeKind lattice, std::size_t max_pr, std::size_t max_pc,
                                                  std::size_t jobs = 1);

/// Ladder pattern from the prose: all x_i (row 0) and y_i (row 1) with
/// i mod 3 != 0. Density 5/6.
PeriodicPattern ladder_pattern();

/// The pattern read literally, y_i only at i mod 3 == 0 (density 2/3); it
/// fails 3-domination.
PeriodicPattern ladder_pattern_literal();

/// Shipped patterns, one per lattice: the search_min_pattern result (for
/// LADDER the prose pattern, a translate of it). Also in data/patterns/.
PeriodicPattern reference_pattern(LatticeKind lattice);
/// Upper bound quoted for the lattice (SQ 2/3, TRI 1/2, HEX 3/4, KING 7/16,
/// LADDER 5/6).
Rational quoted_upper_bound(LatticeKind lattice);

struct TreeConstruction {
    Graph graph;
    DetectorSet detectors;
    std::vector<std::size_t> depth;
    /// Vertices at depth <= radius - 2.
    VertexSet interior;
    Verdict interior_verdict;
    Rational interior_density;
};

/// Radius-r ball of the 3-regular tree with the BFS construction: root
/// excluded, its neighbours included, then every visited vertex tops up its
/// closed neighbourhood to 3 detectors from its unvisited neighbours.
/// Throws InputError when radius < 3.
TreeConstruction build_tree3_errld(std::size_t radius);

/// Window labels: letter = column (a, b, ...), number = row from 1.
struct SquareExampleMatch {
    std::size_t row_shift = 0;
    std::size_t col_shift = 0;
    bool transposed = false;
};

/// Shifts (and optionally the transposed labelling) of an SQ pattern for
/// which (c3, c4) are both detectors and exactly 2-distinguished, and (d3,
/// d4) are both non-detectors and exactly 6-distinguished.
std::vector<SquareExampleMatch> find_square_example(const PeriodicPattern& p);

}  // namespace faultdom

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faultdom/graph.hpp"
#include "faultdom/verify.hpp"

namespace faultdom {

struct Fault {
    VertexId detector = 0;
    Symbol reported = kNoIntruder;

    friend bool operator==(const Fault&, const Fault&) = default;
};

/// At most one intruder and at most one faulty detector.
struct Scenario {
    std::optional<VertexId> intruder;
    std::optional<Fault> fault;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

std::string format_scenario(const Graph& g, const Scenario& sc);

/// Expected transmissions with the fault coordinate overwritten. Throws
/// InputError when S is empty, the intruder is out of range, the fault names
/// a non-detector, or the reported symbol is invalid or equals the correct one.
TransmissionVector simulate(const Graph& g, const VertexSet& s, const Scenario& sc);

enum class Outcome { NoIntruder, Located, Ambiguous, Inconsistent };

std::string_view outcome_name(Outcome o);

struct DecodeResult {
    Outcome outcome = Outcome::Inconsistent;
    /// Located: the single vertex. Ambiguous: every surviving vertex.
    std::vector<VertexId> candidates;
    /// Ambiguous only: "no intruder" is also consistent.
    bool none_possible = false;

    friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

std::string format_decode(const Graph& g, const DecodeResult& r);

/// Reference decoder: every hypothesis (no intruder, or an intruder at p)
/// whose fault-free vector is within Hamming distance 1 of `o`. Throws
/// InputError unless o's detectors are exactly S in ascending order.
DecodeResult decode_consistency(const Graph& g, const VertexSet& s, const TransmissionVector& o);

/// Elimination decoder following the case analysis on how many detectors
/// transmit 2 (0, 1 or 2; more is Inconsistent). With an intruder present,
/// every pair p < q of vertices is examined and one or both eliminated; the
/// survivors decide the outcome (none: Inconsistent, one: Located, more:
/// Ambiguous).
DecodeResult decode_elimination(const Graph& g, const VertexSet& s, const TransmissionVector& o);

/// True outcome of a scenario as a decode result.
DecodeResult truth(const Scenario& sc);

struct SweepReport {
    std::size_t scenarios = 0;
    std::size_t correct = 0;
    std::size_t disagreements = 0;
    /// First few scenarios decoded wrongly by either decoder.
    std::vector<Scenario> failures;
};

/// Every intruder in V plus "none", times every fault (none, or each
/// detector reporting each of its two wrong symbols). Both decoders must
/// return the truth. Throws InputError unless S verifies as ERR_LD.
SweepReport exhaustive_sweep(const Graph& g, const VertexSet& s, std::size_t jobs = 1);

/// "scenarios=<k> correct=<k> disagreements=<k>\n"
std::string format_sweep(const SweepReport& r);

/// Two legal scenarios with different intruders and identical vectors,
/// built from a violated condition: the two hypotheses it names (no
/// intruder vs v for (i), else the two witnesses) have fault-free vectors
/// within distance 2, so one fault on each side meets in the middle.
/// nullopt when the hypotheses are 3 or more apart.
std::optional<std::pair<Scenario, Scenario>> failure_witness(const Graph& g, const VertexSet& s,
                                                             const Violation& violation);

/// One "detector:symbol" pair per line.
std::string format_transmissions(const TransmissionVector& o);
/// Throws InputError on bad syntax, a symbol outside 0..2, or a repeated
/// detector. Output is sorted by detector.
TransmissionVector parse_transmissions(std::string_view text);

}  // namespace faultdom

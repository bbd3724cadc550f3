#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "faultdom/graph.hpp"

namespace faultdom {

/// graph6 encoding (n < 258048). Labels are dropped.
std::string to_graph6(const Graph& g);
/// Throws InputError on a malformed string or a length mismatch.
Graph from_graph6(std::string_view text);

/// One graph6 string per line; blank lines and '#' comments skipped.
std::vector<Graph> parse_graph6_lines(std::string_view text);
std::string format_graph6_lines(const std::vector<Graph>& graphs);

/// Canonically relabelled copy: isomorphic inputs give identical outputs.
/// Individualization-refinement over colour-refinement partitions, keeping
/// the lexicographically least adjacency matrix over all leaves. n <= 64.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// All graphs on n vertices up to isomorphism (n <= 9), built by adding a
/// vertex with every neighbourhood to each graph on n - 1 vertices and
/// deduplicating canonical forms. Sorted by graph6 string.
std::vector<Graph> all_graphs(std::size_t n);

/// Connected simple cubic graphs on n vertices up to isomorphism (even n,
/// 4 <= n <= 16). Grows connected subcubic graphs one vertex at a time,
/// keeping only those whose degree deficits the remaining vertices can still
/// fill. Sorted by graph6 string.
std::vector<Graph> connected_cubic_graphs(std::size_t n);

/// Uniform-ish random connected simple cubic graph by the configuration
/// model with rejection. Throws InputError on odd n or n < 4.
Graph random_cubic_graph(std::size_t n, std::uint64_t seed);

/// Connected, minimum degree >= 2 and twin-free.
bool errld_candidate(const Graph& g);

}  // namespace faultdom

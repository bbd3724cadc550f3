#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultdom/graph.hpp"
#include "faultdom/vertex_set.hpp"

namespace faultdom {

// Line-oriented text formats. `#` starts a comment anywhere on a line.
//
//   edge list     first line "n m", then m lines "u v" (0-based)
//   detector set  one line of vertex indices, or "*" for every vertex
//   labels        one "index label" pair per line

Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Applies a label sidecar to `g` (returns a relabeled copy).
Graph apply_labels(const Graph& g, std::string_view label_text);
std::string format_labels(const Graph& g);

DetectorSet parse_detector_set(std::string_view text, std::size_t n);
std::string format_detector_set(const VertexSet& s);

/// DOT rendering; detectors are drawn filled, everything else unfilled.
std::string to_dot(const Graph& g, const VertexSet* detectors = nullptr, std::string_view name = "G");

/// Edge set of a DOT document produced by to_dot (node ids must be integers).
std::vector<Edge> parse_dot_edges(std::string_view dot);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Non-empty lines with comments and surrounding whitespace removed.
std::vector<std::string> content_lines(std::string_view text);

}  // namespace faultdom

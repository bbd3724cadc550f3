#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faultdom/vertex_set.hpp"

namespace faultdom {

using Edge = std::pair<VertexId, VertexId>;

/// Upper bound on graph order; every vertex carries a dense neighborhood row.
inline constexpr std::size_t kMaxVertices = 100'000;

/// Immutable simple undirected graph.
///
/// Adjacency is held twice: sorted neighbor lists for traversal and one dense
/// bitset row per vertex for the word-parallel neighborhood algebra used by
/// the verifiers. Labels are cosmetic; every algorithm keys on indices.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on an out-of-range endpoint, a self-loop or a
    /// repeated edge, naming the offending pair.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    const VertexSet& open_row(VertexId v) const { return rows_[v]; }
    VertexSet open_neighborhood(VertexId v) const;
    /// N[v] = N(v) + v. Throws InputError when v is out of range.
    VertexSet closed_neighborhood(VertexId v) const;

    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    bool is_regular(std::size_t d) const;
    bool has_edge(VertexId u, VertexId v) const { return rows_[u].contains(v); }

    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Label of v, or its decimal index when unlabeled.
    std::string label(VertexId v) const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find_label(std::string_view label) const;

    void check_vertex(VertexId v) const;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Unordered pairs {u, v} (u < v) with N(u) = N(v) or N[u] = N[v].
std::vector<Edge> find_twins(const Graph& g);

/// BFS hop count; nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, VertexId u, VertexId v);

/// Hop distances from `source` to every vertex (SIZE_MAX when unreachable).
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

/// Vertices within `radius` hops of v, including v, ascending.
std::vector<VertexId> ball(const Graph& g, VertexId v, std::size_t radius);

bool is_connected(const Graph& g);

}  // namespace faultdom

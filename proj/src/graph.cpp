#include "faultdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "faultdom/error.hpp"

namespace faultdom {

namespace {

std::string pair_text(VertexId u, VertexId v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
    if (n > kMaxVertices)
        throw InputError("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));
    if (!labels.empty() && labels.size() != n)
        throw InputError("label count " + std::to_string(labels.size()) + " does not match n=" + std::to_string(n));

    Graph g;
    g.adjacency_.assign(n, {});
    g.rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range: " + pair_text(u, v));
        if (u == v) throw InputError("self-loop: " + pair_text(u, v));
        if (g.rows_[u].contains(v)) throw InputError("duplicate edge: " + pair_text(u, v));
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    g.edge_count_ = edges.size();
    g.labels_ = std::move(labels);
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= order())
        throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
}

VertexSet Graph::open_neighborhood(VertexId v) const {
    check_vertex(v);
    return rows_[v];
}

VertexSet Graph::closed_neighborhood(VertexId v) const {
    check_vertex(v);
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
}

std::size_t Graph::min_degree() const {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (const auto& adj : adjacency_) d = std::min(d, adj.size());
    return adjacency_.empty() ? 0 : d;
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& adj : adjacency_) d = std::max(d, adj.size());
    return d;
}

bool Graph::is_regular(std::size_t d) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(), [d](const auto& adj) { return adj.size() == d; });
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(VertexId v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

std::optional<VertexId> Graph::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<VertexId>(i);
    return std::nullopt;
}

std::vector<Edge> find_twins(const Graph& g) {
    std::vector<Edge> twins;
    const auto n = static_cast<VertexId>(g.order());
    for (VertexId u = 0; u < n; ++u) {
        VertexSet closed_u = g.open_row(u);
        closed_u.insert(u);
        for (VertexId v = u + 1; v < n; ++v) {
            if (g.degree(u) != g.degree(v)) continue;
            if (g.open_row(u) == g.open_row(v)) {
                twins.emplace_back(u, v);
                continue;
            }
            if (g.has_edge(u, v)) {
                VertexSet closed_v = g.open_row(v);
                closed_v.insert(v);
                if (closed_u == closed_v) twins.emplace_back(u, v);
            }
        }
    }
    return twins;
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
    g.check_vertex(source);
    std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(x)) {
            if (dist[y] != std::numeric_limits<std::size_t>::max()) continue;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, VertexId u, VertexId v) {
    g.check_vertex(v);
    const auto d = bfs_distances(g, u)[v];
    if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return d;
}

std::vector<VertexId> ball(const Graph& g, VertexId v, std::size_t radius) {
    g.check_vertex(v);
    std::vector<VertexId> frontier{v};
    VertexSet seen(g.order());
    seen.insert(v);
    for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
        std::vector<VertexId> next;
        for (VertexId x : frontier)
            for (VertexId y : g.neighbors(x))
                if (!seen.contains(y)) {
                    seen.insert(y);
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
    return seen.members();
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

}  // namespace faultdom

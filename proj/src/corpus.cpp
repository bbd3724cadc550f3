#include "faultdom/corpus.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "faultdom/error.hpp"
#include "faultdom/io.hpp"

namespace faultdom {

namespace {

constexpr std::size_t kGraph6Max = 258047;

void put_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
}

using Rows = std::vector<std::uint64_t>;

Rows rows_of(const Graph& g) {
    Rows rows(g.order(), 0);
    for (VertexId v = 0; v < g.order(); ++v)
        for (VertexId u : g.neighbors(v)) rows[v] |= std::uint64_t{1} << u;
    return rows;
}

// Ordered partition as a colour per vertex (0 .. cells-1).
struct Partition {
    std::vector<std::uint32_t> colour;
    std::size_t cells = 0;
};

void refine(const Rows& adj, Partition& p) {
    const auto n = adj.size();
    while (true) {
        std::vector<std::pair<std::vector<std::uint32_t>, VertexId>> keys(n);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<std::uint32_t> key(p.cells + 1, 0);
            key[0] = p.colour[v];
            for (auto bits = adj[v]; bits; bits &= bits - 1) ++key[1 + p.colour[std::countr_zero(bits)]];
            keys[v] = {std::move(key), v};
        }
        std::sort(keys.begin(), keys.end());
        std::size_t cells = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && keys[i].first != keys[i - 1].first) ++cells;
            p.colour[keys[i].second] = static_cast<std::uint32_t>(cells);
        }
        ++cells;
        if (cells == p.cells) return;
        p.cells = cells;
    }
}

Rows relabel(const Rows& adj, const std::vector<std::uint32_t>& perm) {
    Rows out(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (auto bits = adj[v]; bits; bits &= bits - 1) out[perm[v]] |= std::uint64_t{1} << perm[std::countr_zero(bits)];
    return out;
}

void search(const Rows& adj, Partition p, Rows& best, bool& have) {
    refine(adj, p);
    const auto n = adj.size();
    if (p.cells == n) {
        auto rows = relabel(adj, p.colour);
        if (!have || rows < best) {
            best = std::move(rows);
            have = true;
        }
        return;
    }
    std::vector<std::size_t> count(p.cells, 0);
    for (auto c : p.colour) ++count[c];
    const auto target = static_cast<std::uint32_t>(std::find_if(count.begin(), count.end(), [](std::size_t k) { return k > 1; }) - count.begin());
    for (VertexId v = 0; v < n; ++v) {
        if (p.colour[v] != target) continue;
        Partition q = p;
        for (auto& c : q.colour)
            if (c >= target) ++c;
        q.colour[v] = target;
        ++q.cells;
        search(adj, std::move(q), best, have);
    }
}

Graph from_rows(const Rows& rows) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < rows.size(); ++v)
        for (auto bits = rows[v]; bits; bits &= bits - 1) {
            const auto u = static_cast<VertexId>(std::countr_zero(bits));
            if (v < u) edges.emplace_back(v, u);
        }
    return Graph::from_edges(rows.size(), edges);
}

std::vector<Graph> sorted_unique(std::set<std::string> codes) {
    std::vector<Graph> out;
    for (const auto& c : codes) out.push_back(from_graph6(c));
    return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const auto n = g.order();
    if (n > kGraph6Max) throw InputError("graph too large for graph6");
    std::string out;
    put_size(out, n);
    int acc = 0, used = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(acc + 63);
                acc = used = 0;
            }
        }
    if (used > 0) out += static_cast<char>((acc << (6 - used)) + 63);
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    for (char ch : text)
        if (ch < 63 || ch > 126) throw InputError("graph6: invalid character");
    if (text.empty()) throw InputError("graph6: empty string");
    std::size_t n = 0, pos = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw InputError("graph6: unsupported size header");
        for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
        pos = 4;
    }
    const std::size_t bits = n * (n - (n > 0)) / 2;
    if (text.size() - pos != (bits + 5) / 6) throw InputError("graph6: length does not match order " + std::to_string(n));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (bits % 6 != 0 && ((text.back() - 63) & ((1 << (6 - bits % 6)) - 1)) != 0)
        throw InputError("graph6: nonzero padding bits");
    return Graph::from_edges(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    for (const auto& line : content_lines(text)) out.push_back(from_graph6(line));
    return out;
}

std::string format_graph6_lines(const std::vector<Graph>& graphs) {
    std::string out;
    for (const auto& g : graphs) out += to_graph6(g) + "\n";
    return out;
}

Graph canonical_form(const Graph& g) {
    if (g.order() > 64) throw InputError("canonical_form supports at most 64 vertices");
    if (g.order() == 0) return g;
    const auto adj = rows_of(g);
    Partition p{std::vector<std::uint32_t>(g.order(), 0), 1};
    Rows best;
    bool have = false;
    search(adj, std::move(p), best, have);
    return from_rows(best);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> all_graphs(std::size_t n) {
    if (n > 9) throw InputError("all_graphs supports n <= 9");
    std::set<std::string> level{to_graph6(Graph::from_edges(n == 0 ? 0 : 1, {}))};
    for (std::size_t m = 1; m < n; ++m) {
        std::set<std::string> next;
        for (const auto& code : level) {
            const auto edges = from_graph6(code).edges();
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                auto grown = edges;
                for (VertexId v = 0; v < m; ++v)
                    if ((mask >> v) & 1) grown.emplace_back(v, static_cast<VertexId>(m));
                next.insert(canonical_graph6(Graph::from_edges(m + 1, grown)));
            }
        }
        level = std::move(next);
    }
    return sorted_unique(std::move(level));
}

std::vector<Graph> connected_cubic_graphs(std::size_t n) {
    if (n % 2 != 0 || n < 4 || n > 16) throw InputError("connected_cubic_graphs needs even n in [4, 16]");
    // connected subcubic graphs that can still be completed with the vertices left
    auto completable = [n](const Graph& g) {
        const std::size_t left = n - g.order();
        std::size_t deficit = 0;
        for (VertexId v = 0; v < g.order(); ++v) {
            const auto d = 3 - g.degree(v);
            if (d > left) return false;
            deficit += d;
        }
        return deficit <= 3 * left && (3 * left - deficit) % 2 == 0 && (left > 0 || deficit == 0);
    };
    std::set<std::string> level{to_graph6(Graph::from_edges(1, {}))};
    for (std::size_t m = 1; m < n; ++m) {
        std::set<std::string> next;
        for (const auto& code : level) {
            const auto g = from_graph6(code);
            const auto edges = g.edges();
            std::vector<VertexId> open;
            for (VertexId v = 0; v < m; ++v)
                if (g.degree(v) < 3) open.push_back(v);
            for (std::uint32_t mask = 1; mask < (1u << open.size()); ++mask) {
                if (std::popcount(mask) > 3) continue;
                auto grown = edges;
                for (std::size_t k = 0; k < open.size(); ++k)
                    if ((mask >> k) & 1) grown.emplace_back(open[k], static_cast<VertexId>(m));
                auto h = Graph::from_edges(m + 1, grown);
                if (completable(h)) next.insert(canonical_graph6(h));
            }
        }
        level = std::move(next);
    }
    return sorted_unique(std::move(level));
}

Graph random_cubic_graph(std::size_t n, std::uint64_t seed) {
    if (n % 2 != 0 || n < 4) throw InputError("random cubic graph needs even n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<VertexId> points(3 * n);
    while (true) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<VertexId>(i / 3);
        std::shuffle(points.begin(), points.end(), rng);
        std::set<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            auto [u, v] = std::minmax(points[i], points[i + 1]);
            simple = u != v && edges.emplace(u, v).second;
        }
        if (!simple) continue;
        std::vector<Edge> list(edges.begin(), edges.end());
        auto g = Graph::from_edges(n, list);
        if (is_connected(g)) return g;
    }
}

bool errld_candidate(const Graph& g) {
    return g.order() > 0 && is_connected(g) && g.min_degree() >= 2 && find_twins(g).empty();
}

}  // namespace faultdom

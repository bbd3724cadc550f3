#include "faultdom/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "faultdom/error.hpp"

namespace faultdom {

namespace {

[[noreturn]] void bad_param(std::string_view family, std::size_t value) {
    throw InputError("invalid parameter " + std::to_string(value) + " for family " + std::string(family));
}

std::vector<std::string> numbered_labels(std::string_view prefix, std::size_t n, std::size_t first = 1) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i + first));
    return labels;
}

Graph cycle(std::size_t n) {
    if (n < 3) bad_param("cycle", n);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
    if (n < 1) bad_param("path", n);
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
    if (n < 1) bad_param("complete", n);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, edges, numbered_labels("v", 10));
}

Graph ladder_segment(std::size_t len) {
    if (len < 2) bad_param("ladder_segment", len);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < len; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < len; ++i) labels.push_back("y" + std::to_string(i));
    const auto L = static_cast<VertexId>(len);
    for (VertexId i = 0; i < L; ++i) {
        edges.emplace_back(i, i + L);
        if (i + 1 < L) {
            edges.emplace_back(i, i + 1);
            edges.emplace_back(i + L, i + 1 + L);
        }
    }
    return Graph::from_edges(2 * len, edges, std::move(labels));
}

std::size_t tree3_order(std::size_t radius) {
    // 1 + 3 + 6 + ... + 3 * 2^(r-1)
    return radius == 0 ? 1 : 1 + 3 * ((std::size_t{1} << radius) - 1);
}

Graph tree3_ball(std::size_t radius) {
    if (radius > 15) bad_param("tree3_ball", radius);
    const std::size_t n = tree3_order(radius);
    std::vector<Edge> edges;
    std::vector<std::string> labels{"r"};
    std::vector<VertexId> layer{0};
    VertexId next = 1;
    for (std::size_t depth = 1; depth <= radius; ++depth) {
        std::vector<VertexId> grown;
        for (VertexId parent : layer) {
            const int children = depth == 1 ? 3 : 2;
            for (int k = 0; k < children; ++k) {
                edges.emplace_back(parent, next);
                labels.push_back("t" + std::to_string(depth) + "_" + std::to_string(grown.size()));
                grown.push_back(next++);
            }
        }
        layer = std::move(grown);
    }
    return Graph::from_edges(n, edges, std::move(labels));
}

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw InputError("expected integer for " + std::string(what) + ", got '" +
                                                          std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

struct LatticeEdges {
    LatticeKind kind;
    std::size_t rows, cols;
    bool wrap;
    std::vector<Edge> edges;

    void add(std::size_t r, std::size_t c, long dr, long dc) {
        long r2 = static_cast<long>(r) + dr;
        long c2 = static_cast<long>(c) + dc;
        const bool wrap_rows = wrap && kind != LatticeKind::LADDER;
        if (wrap_rows) r2 = (r2 + static_cast<long>(rows)) % static_cast<long>(rows);
        if (wrap) c2 = (c2 + static_cast<long>(cols)) % static_cast<long>(cols);
        if (r2 < 0 || c2 < 0 || r2 >= static_cast<long>(rows) || c2 >= static_cast<long>(cols)) return;
        edges.emplace_back(static_cast<VertexId>(r * cols + c), static_cast<VertexId>(r2 * cols + c2));
    }

    // Each undirected edge is generated once, from its "lower" endpoint.
    void build() {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                add(r, c, 0, 1);
                switch (kind) {
                    case LatticeKind::SQ: add(r, c, 1, 0); break;
                    case LatticeKind::TRI:
                        add(r, c, 1, 0);
                        add(r, c, 1, 1);
                        break;
                    case LatticeKind::KING:
                        add(r, c, 1, 0);
                        add(r, c, 1, 1);
                        add(r, c, 1, -1);
                        break;
                    case LatticeKind::HEX:
                        if ((r + c) % 2 == 0) add(r, c, 1, 0);
                        break;
                    case LatticeKind::LADDER:
                        if (r == 0) add(r, c, 1, 0);
                        break;
                }
            }
    }
};

std::vector<std::string> grid_labels(std::size_t rows, std::size_t cols) {
    std::vector<std::string> labels;
    labels.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) labels.push_back(std::to_string(r) + "," + std::to_string(c));
    return labels;
}

}  // namespace

Graph make_family(Family family, std::size_t param) {
    switch (family) {
        case Family::Cycle: return cycle(param);
        case Family::Path: return path(param);
        case Family::Complete: return complete(param);
        case Family::Petersen: return petersen();
        case Family::LadderSegment: return ladder_segment(param);
        case Family::Tree3Ball: return tree3_ball(param);
    }
    throw InputError("unknown family");
}

Graph make_family(std::string_view spec) {
    const auto parts = split(spec, ':');
    const auto name = parts[0];
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i) throw InputError("family '" + std::string(spec) + "' is missing a parameter");
        return parse_size(parts[i], name);
    };
    if (name == "petersen") return make_family(Family::Petersen);
    if (name == "cycle") return make_family(Family::Cycle, arg(1));
    if (name == "path") return make_family(Family::Path, arg(1));
    if (name == "complete") return make_family(Family::Complete, arg(1));
    if (name == "ladder_segment") return make_family(Family::LadderSegment, arg(1));
    if (name == "tree3_ball") return make_family(Family::Tree3Ball, arg(1));
    if (name == "torus") {
        if (parts.size() != 4) throw InputError("torus spec is torus:KIND:ROWS:COLS");
        return make_torus(parse_lattice(parts[1]), arg(2), arg(3));
    }
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

std::vector<std::size_t> tree3_depths(std::size_t radius) {
    std::vector<std::size_t> depth{0};
    std::size_t width = 3;
    for (std::size_t d = 1; d <= radius; ++d, width *= 2) depth.insert(depth.end(), width, d);
    return depth;
}

std::string_view lattice_name(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::SQ: return "SQ";
        case LatticeKind::TRI: return "TRI";
        case LatticeKind::HEX: return "HEX";
        case LatticeKind::KING: return "KING";
        case LatticeKind::LADDER: return "LADDER";
    }
    return "?";
}

LatticeKind parse_lattice(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (up == "SQ") return LatticeKind::SQ;
    if (up == "TRI") return LatticeKind::TRI;
    if (up == "HEX") return LatticeKind::HEX;
    if (up == "KING" || up == "K") return LatticeKind::KING;
    if (up == "LADDER") return LatticeKind::LADDER;
    throw InputError("unknown lattice '" + std::string(name) + "'");
}

std::size_t lattice_degree(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::SQ: return 4;
        case LatticeKind::TRI: return 6;
        case LatticeKind::HEX: return 3;
        case LatticeKind::KING: return 8;
        case LatticeKind::LADDER: return 3;
    }
    return 0;
}

Graph make_torus(LatticeKind kind, std::size_t rows, std::size_t cols) {
    const std::string name(lattice_name(kind));
    if (kind == LatticeKind::LADDER) {
        if (rows != 2) throw InputError("LADDER torus needs rows=2, got " + std::to_string(rows));
        if (cols < 6) throw InputError("LADDER torus needs cols >= 6, got " + std::to_string(cols));
    } else {
        if (rows < 5 || cols < 5)
            throw InputError(name + " torus dimensions must be >= 5, got " + std::to_string(rows) + "x" +
                             std::to_string(cols));
        if (kind == LatticeKind::HEX && (rows % 2 != 0 || cols % 2 != 0))
            throw InputError("HEX torus needs even dimensions, got " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    if (rows * cols > kMaxVertices) throw InputError("torus too large");
    LatticeEdges builder{kind, rows, cols, true, {}};
    builder.build();
    return Graph::from_edges(rows * cols, builder.edges, grid_labels(rows, cols));
}

Graph make_window(LatticeKind kind, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw InputError("window dimensions must be positive");
    if (kind == LatticeKind::LADDER && rows != 2) throw InputError("LADDER window needs rows=2");
    LatticeEdges builder{kind, rows, cols, false, {}};
    builder.build();
    return Graph::from_edges(rows * cols, builder.edges, grid_labels(rows, cols));
}

}  // namespace faultdom

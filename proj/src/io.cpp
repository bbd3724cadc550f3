#include "faultdom/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "faultdom/error.hpp"

namespace faultdom {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

long long parse_int(const std::string& token, std::string_view what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw InputError("expected integer " + std::string(what) + ", got '" + token + "'");
    }
}

VertexId parse_vertex(const std::string& token, std::size_t n) {
    const long long v = parse_int(token, "vertex index");
    if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw InputError("vertex " + token + " out of range for n=" + std::to_string(n));
    return static_cast<VertexId>(v);
}

}  // namespace

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) lines.emplace_back(line);
        start = end + 1;
    }
    return lines;
}

Graph parse_edge_list(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw InputError("edge list: missing 'n m' header");
    std::istringstream header(lines[0]);
    std::string n_tok, m_tok, extra;
    if (!(header >> n_tok >> m_tok) || (header >> extra)) throw InputError("edge list: header must be 'n m'");
    const long long n = parse_int(n_tok, "vertex count");
    const long long m = parse_int(m_tok, "edge count");
    if (n < 0 || m < 0) throw InputError("edge list: negative count in header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw InputError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string u, v;
        if (!(in >> u >> v) || (in >> extra)) throw InputError("edge list: bad edge line '" + lines[i] + "'");
        const long long a = parse_int(u, "endpoint");
        const long long b = parse_int(v, "endpoint");
        if (a < 0 || b < 0) throw InputError("edge list: negative endpoint in '" + lines[i] + "'");
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph apply_labels(const Graph& g, std::string_view label_text) {
    std::vector<std::string> labels(g.order());
    for (VertexId v = 0; v < g.order(); ++v) labels[v] = std::to_string(v);
    for (const auto& line : content_lines(label_text)) {
        std::istringstream in(line);
        std::string idx, label;
        if (!(in >> idx >> label)) throw InputError("labels: bad line '" + line + "'");
        labels[parse_vertex(idx, g.order())] = label;
    }
    const auto edges = g.edges();
    return Graph::from_edges(g.order(), edges, std::move(labels));
}

std::string format_labels(const Graph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.order(); ++v) out << v << ' ' << g.label(v) << '\n';
    return out.str();
}

DetectorSet parse_detector_set(std::string_view text, std::size_t n) {
    const auto lines = content_lines(text);
    if (lines.size() > 1) throw InputError("detector set: expected a single line");
    if (lines.empty()) return DetectorSet(n);
    if (lines[0] == "*") return DetectorSet::all(n);
    DetectorSet s(n);
    std::istringstream in(lines[0]);
    std::string tok;
    while (in >> tok) {
        const VertexId v = parse_vertex(tok, n);
        if (s.contains(v)) throw InputError("detector set: vertex " + tok + " listed twice");
        s.insert(v);
    }
    return s;
}

std::string format_detector_set(const VertexSet& s) {
    std::ostringstream out;
    bool first = true;
    s.for_each([&](VertexId v) {
        if (!first) out << ' ';
        out << v;
        first = false;
    });
    out << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, const VertexSet* detectors, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        const bool filled = detectors && detectors->contains(v);
        out << "  " << v << " [label=\"" << g.label(v) << "\"";
        if (filled) out << ", style=filled, fillcolor=gray";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<Edge> parse_dot_edges(std::string_view dot) {
    static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
    std::vector<Edge> edges;
    std::smatch m;
    for (const auto& line : content_lines(dot)) {
        if (std::regex_match(line, m, edge_re))
            edges.emplace_back(static_cast<VertexId>(std::stoul(m[1])), static_cast<VertexId>(std::stoul(m[2])));
    }
    return edges;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << contents;
}

}  // namespace faultdom

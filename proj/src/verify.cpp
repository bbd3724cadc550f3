#include "faultdom/verify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "faultdom/error.hpp"

namespace faultdom {

namespace {

using simd::Words;

bool in_scope(const VerifyOptions& options, VertexId v) { return !options.scope || options.scope->contains(v); }

// Candidate partners of u (all > u) under the locality rule: the radius-2
// ball of u, plus every vertex failing (i); every vertex when u itself fails.
VertexSet local_partners(const Graph& g, VertexId u, const VertexSet& weak) {
    if (weak.contains(u)) return VertexSet::full(g.order());
    VertexSet out = g.open_row(u);
    for (VertexId w : g.neighbors(u)) out |= g.open_row(w);
    out |= weak;
    return out;
}

}  // namespace

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::LD: return "LD";
        case Variant::RED_LD: return "RED_LD";
        case Variant::DET_LD: return "DET_LD";
        case Variant::ERR_LD: return "ERR_LD";
    }
    return "?";
}

Variant parse_variant(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "ld") return Variant::LD;
    if (t == "red" || t == "red_ld" || t == "red:ld") return Variant::RED_LD;
    if (t == "det" || t == "det_ld" || t == "det:ld") return Variant::DET_LD;
    if (t == "err" || t == "err_ld" || t == "err:ld") return Variant::ERR_LD;
    throw InputError("unknown variant '" + std::string(text) + "'");
}

int property_count(Variant v) {
    switch (v) {
        case Variant::LD: return 2;
        case Variant::RED_LD: return 3;
        default: return 4;
    }
}

std::string_view roman(int property) {
    static constexpr std::string_view names[] = {"-", "i", "ii", "iii", "iv"};
    return property >= 0 && property <= 4 ? names[property] : "?";
}

namespace detail {

int domination_threshold(Variant variant) {
    switch (variant) {
        case Variant::LD: return 1;
        case Variant::RED_LD:
        case Variant::DET_LD: return 2;
        case Variant::ERR_LD: return 3;
    }
    return 0;
}

Check check_vertex(const Graph& g, Words s, VertexId v, bool v_in, Variant variant) {
    const auto& k = simd::active();
    const int open = static_cast<int>(k.popcount_and(g.open_row(v).words(), s));
    if (variant == Variant::LD) {
        if (v_in || open >= 1) return {};
        return {1, 1 - open};
    }
    const int closed = open + (v_in ? 1 : 0);
    const int need = domination_threshold(variant);
    if (closed >= need) return {};
    return {1, need - closed};
}

Check check_pair(const Graph& g, Words s, VertexId u, bool u_in, VertexId v, bool v_in, Variant variant) {
    const auto& k = simd::active();
    const Words ru = g.open_row(u).words();
    const Words rv = g.open_row(v).words();
    const int sym = static_cast<int>(k.popcount_xor_and(ru, rv, s));
    const int adj = g.has_edge(u, v) ? 1 : 0;
    auto need = [](int property, int have, int want) { return have >= want ? Check{} : Check{property, want - have}; };

    // Orient mixed pairs as (non-detector a, detector b).
    const bool mixed = u_in != v_in;
    const Words ra = u_in ? rv : ru;
    const Words rb = u_in ? ru : rv;

    switch (variant) {
        case Variant::LD:
            if (!u_in && !v_in) return need(2, sym, 1);
            return {};
        case Variant::RED_LD:
            // The detector lies in the symmetric difference exactly when adjacent.
            if (mixed) return need(2, sym - adj, 1);
            if (!u_in) return need(3, sym, 2);
            return {};
        case Variant::DET_LD: {
            if (u_in && v_in) return need(2, sym, 1);
            if (mixed) {
                const int a = static_cast<int>(k.popcount_andnot_and(ra, rb, s));
                const int b = static_cast<int>(k.popcount_andnot_and(rb, ra, s));
                if (a >= 2 || b >= 1) return {};
                return {3, std::min(2 - a, 1 - b)};
            }
            const int a = static_cast<int>(k.popcount_andnot_and(rv, ru, s));
            const int b = static_cast<int>(k.popcount_andnot_and(ru, rv, s));
            if (a >= 2 || b >= 2) return {};
            return {4, std::min(2 - a, 2 - b)};
        }
        case Variant::ERR_LD:
            if (u_in && v_in) return need(2, sym - 2 * adj, 1);
            if (mixed) return need(3, sym - adj, 2);
            return need(4, sym, 3);
    }
    return {};
}

}  // namespace detail

std::size_t domination_count(const Graph& g, const VertexSet& s, VertexId v) {
    g.check_vertex(v);
    return simd::active().popcount_and(g.open_row(v).words(), s.words()) + (s.contains(v) ? 1 : 0);
}

std::size_t distinguishing_count(const Graph& g, const VertexSet& s, VertexId u, VertexId v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InputError("distinguishing_count needs two distinct vertices");
    std::size_t sym = simd::active().popcount_xor_and(g.open_row(u).words(), g.open_row(v).words(), s.words());
    if (g.has_edge(u, v)) sym -= (s.contains(u) ? 1 : 0) + (s.contains(v) ? 1 : 0);
    return sym;
}

Verdict verify(const Graph& g, const VertexSet& s, Variant variant, const VerifyOptions& options) {
    if (s.universe() != g.order()) throw InputError("detector set universe does not match graph order");
    const auto n = static_cast<VertexId>(g.order());
    const Words bits = s.words();
    Verdict verdict;
    auto record = [&](int property, std::vector<VertexId> witnesses, int deficit) {
        verdict.ok = false;
        if (verdict.violations.size() >= options.max_violations) {
            verdict.truncated = true;
            return false;
        }
        verdict.violations.push_back({variant, property, std::move(witnesses), deficit});
        return true;
    };

    VertexSet weak(n);
    for (VertexId v = 0; v < n; ++v) {
        const auto c = detail::check_vertex(g, bits, v, s.contains(v), variant);
        if (!c.property) continue;
        weak.insert(v);
        if (in_scope(options, v) && !record(c.property, {v}, c.deficit)) return verdict;
    }

    for (VertexId u = 0; u < n; ++u) {
        if (!in_scope(options, u)) continue;
        const bool u_in = s.contains(u);
        auto visit = [&](VertexId v) {
            if (v <= u || !in_scope(options, v)) return true;
            const auto c = detail::check_pair(g, bits, u, u_in, v, s.contains(v), variant);
            return !c.property || record(c.property, {u, v}, c.deficit);
        };
        if (options.full_pair_scan) {
            for (VertexId v = u + 1; v < n; ++v)
                if (!visit(v)) return verdict;
        } else {
            for (VertexId v : local_partners(g, u, weak).members())
                if (!visit(v)) return verdict;
        }
    }
    return verdict;
}

bool verify_errld_unified(const Graph& g, const VertexSet& s) {
    const auto n = static_cast<VertexId>(g.order());
    for (VertexId v = 0; v < n; ++v)
        if (domination_count(g, s, v) < 3) return false;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            const std::size_t inside = (s.contains(u) ? 1 : 0) + (s.contains(v) ? 1 : 0);
            if (distinguishing_count(g, s, u, v) < 3 - inside) return false;
        }
    return true;
}

bool errld_exists(const Graph& g) {
    if (g.order() == 0) return true;
    return g.min_degree() >= 2 && find_twins(g).empty();
}

bool variant_exists(const Graph& g, Variant variant) {
    VerifyOptions options;
    options.max_violations = 1;
    return verify(g, VertexSet::full(g.order()), variant, options).ok;
}

std::string format_verdict(const Verdict& verdict) {
    if (verdict.ok) return "OK\n";
    std::ostringstream out;
    for (const auto& v : verdict.violations) {
        out << "VIOLATION " << variant_name(v.variant) << ' ' << roman(v.property);
        for (VertexId w : v.witnesses) out << ' ' << w;
        out << ' ' << v.deficit << '\n';
    }
    if (verdict.truncated) out << "TRUNCATED\n";
    return out.str();
}

TransmissionVector expected_transmissions(const Graph& g, const VertexSet& s, std::optional<VertexId> intruder) {
    if (intruder) g.check_vertex(*intruder);
    TransmissionVector t;
    t.detectors = s.members();
    t.symbols.reserve(t.detectors.size());
    for (VertexId w : t.detectors) {
        Symbol sym = kNoIntruder;
        if (intruder && *intruder == w)
            sym = kHere;
        else if (intruder && g.has_edge(w, *intruder))
            sym = kNeighbour;
        t.symbols.push_back(sym);
    }
    return t;
}

std::size_t hamming(const TransmissionVector& a, const TransmissionVector& b) {
    if (a.detectors != b.detectors) throw InputError("transmission vectors cover different detectors");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.symbols.size(); ++i) d += a.symbols[i] != b.symbols[i];
    return d;
}

CodeDistance code_min_distance(const Graph& g, const VertexSet& s) {
    CodeDistance result;
    if (s.empty()) {
        result.degenerate = true;
        return result;
    }
    std::vector<TransmissionVector> code;
    code.push_back(expected_transmissions(g, s, std::nullopt));
    for (VertexId p = 0; p < g.order(); ++p) code.push_back(expected_transmissions(g, s, p));
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            result.min_distance = std::min(result.min_distance, hamming(code[i], code[j]));
    return result;
}

}  // namespace faultdom

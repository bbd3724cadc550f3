#include "faultdom/localization.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "faultdom/error.hpp"
#include "faultdom/io.hpp"

namespace faultdom {

namespace {

constexpr Symbol kNotDetector = 255;

Symbol expected_symbol(const Graph& g, std::optional<VertexId> intruder, VertexId w) {
    if (!intruder) return kNoIntruder;
    if (*intruder == w) return kHere;
    return g.has_edge(*intruder, w) ? kNeighbour : kNoIntruder;
}

void check_domain(const VertexSet& s, const TransmissionVector& o) {
    if (o.symbols.size() != o.detectors.size()) throw InputError("transmission vector is malformed");
    if (o.detectors != s.members()) throw InputError("transmission vector does not cover exactly the detectors");
    for (Symbol x : o.symbols)
        if (x > kHere) throw InputError("transmitted symbol must be 0, 1 or 2");
}

DecodeResult from_survivors(std::vector<VertexId> survivors, bool none_possible) {
    DecodeResult r;
    if (survivors.empty()) {
        r.outcome = none_possible ? Outcome::NoIntruder : Outcome::Inconsistent;
    } else if (survivors.size() == 1 && !none_possible) {
        r.outcome = Outcome::Located;
    } else {
        r.outcome = Outcome::Ambiguous;
        r.none_possible = none_possible;
    }
    r.candidates = std::move(survivors);
    return r;
}

// Observed symbols by vertex, plus the pairwise elimination rules.
class Eliminator {
public:
    Eliminator(const Graph& g, const VertexSet& s, const TransmissionVector& o)
        : g_(g), s_(s), at_(g.order(), kNotDetector) {
        for (std::size_t i = 0; i < o.size(); ++i) at_[o.detectors[i]] = o.symbols[i];
        s.for_each([&](VertexId w) {
            if (at_[w] == kNeighbour) a_.push_back(w);
            if (at_[w] == kHere) twos_.push_back(w);
        });
    }

    DecodeResult run() {
        if (twos_.size() > 2) return {};
        if (twos_.size() == 2) return two_twos(twos_[0], twos_[1]);
        if (twos_.size() == 1) {
            const VertexId v = twos_[0];
            if (a_.empty()) return {Outcome::NoIntruder, {}, false};
            if (a_.size() == 1) {
                if (!g_.has_edge(v, a_[0])) return {};
                return {Outcome::Located, {v}, false};
            }
        } else if (a_.size() <= 1) {
            return {Outcome::NoIntruder, {}, false};
        }
        const auto n = g_.order();
        std::vector<char> out(n, 0);
        for (VertexId p = 0; p < n; ++p)
            for (VertexId q = p + 1; q < n; ++q) {
                const auto [ep, eq] = twos_.empty() ? no_two(p, q) : one_two(p, q, twos_[0]);
                out[p] |= ep;
                out[q] |= eq;
            }
        std::vector<VertexId> survivors;
        for (VertexId v = 0; v < n; ++v)
            if (!out[v]) survivors.push_back(v);
        return from_survivors(std::move(survivors), false);
    }

private:
    using Elim = std::pair<bool, bool>;

    bool in_s(VertexId v) const { return s_.contains(v); }
    bool in_a(VertexId w) const { return at_[w] == kNeighbour; }
    bool zero(VertexId w) const { return at_[w] == kNoIntruder; }
    bool adj(VertexId p, VertexId w) const { return g_.has_edge(p, w); }

    // Detectors in (N(p) & S) xor (N(q) & S), ascending, skipping `skip`.
    std::vector<VertexId> sym(VertexId p, VertexId q, std::initializer_list<VertexId> skip) const {
        std::vector<VertexId> out;
        auto add_side = [&](VertexId x, VertexId y) {
            for (VertexId w : g_.neighbors(x))
                if (in_s(w) && !adj(y, w) && std::find(skip.begin(), skip.end(), w) == skip.end()) out.push_back(w);
        };
        add_side(p, q);
        add_side(q, p);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    static Elim swap(Elim e) { return {e.second, e.first}; }

    std::size_t closed_outside_a(VertexId p) const {
        std::size_t k = in_s(p) && !in_a(p);
        for (VertexId w : g_.neighbors(p)) k += in_s(w) && !in_a(w);
        return k;
    }

    Elim no_two(VertexId p, VertexId q) const {
        const bool ep = closed_outside_a(p) >= 2, eq = closed_outside_a(q) >= 2;
        if (ep || eq) return {ep, eq};
        if (in_s(p) && in_s(q)) {
            const auto d = sym(p, q, {p, q});
            if (d.empty()) return {false, false};
            const VertexId w = d.front();
            if (!adj(p, w)) return swap(no_two_case1(q, w));
            return no_two_case1(p, w);
        }
        if (in_s(p) != in_s(q)) return in_s(p) ? no_two_case2(p, q) : swap(no_two_case2(q, p));
        return no_two_case3(p, q);
    }

    Elim no_two_case1(VertexId, VertexId w) const { return in_a(w) ? Elim{false, true} : Elim{true, false}; }

    // p in S, q not in S.
    Elim no_two_case2(VertexId p, VertexId q) const {
        const auto d = sym(p, q, {p});
        if (d.size() < 2) return {false, false};
        const VertexId xy[] = {d[0], d[1]};
        for (VertexId x : xy)
            if (adj(p, x) && !in_a(x)) return {true, false};
        for (VertexId x : xy)
            if (adj(q, x) && in_a(x)) return {true, false};
        if (adj(p, xy[0]) && adj(p, xy[1])) return {false, true};
        return {false, true};
    }

    Elim no_two_case3(VertexId p, VertexId q) const {
        const auto d = sym(p, q, {});
        if (d.size() < 3) return {false, false};
        std::vector<VertexId> xyz(d.begin(), d.begin() + 3);
        auto side = [&](VertexId x) { return std::count_if(xyz.begin(), xyz.end(), [&](VertexId w) { return adj(x, w); }); };
        if (side(p) < side(q)) return swap(no_two_case3_oriented(q, xyz));
        return no_two_case3_oriented(p, xyz);
    }

    Elim no_two_case3_oriented(VertexId p, const std::vector<VertexId>& xyz) const {
        std::vector<VertexId> near, far;
        for (VertexId w : xyz) (adj(p, w) ? near : far).push_back(w);
        const auto near_a = std::count_if(near.begin(), near.end(), [&](VertexId w) { return in_a(w); });
        if (near_a >= 2) return {false, true};
        if (far.empty()) return {true, false};
        // two in N(p), at most one of them in A
        if (near_a == 0 || in_a(far[0])) return {true, false};
        return {false, true};
    }

    Elim one_two(VertexId p, VertexId q, VertexId v) const {
        if (in_s(p) && in_s(q)) return one_two_case1(p, q, v);
        if (in_s(p) != in_s(q)) return in_s(p) ? one_two_case2(p, q, v) : swap(one_two_case2(q, p, v));
        return one_two_case3(p, q, v);
    }

    bool near_closed(VertexId p, VertexId v) const { return p == v || adj(p, v); }

    Elim one_two_case1(VertexId p, VertexId q, VertexId v) const {
        if (!near_closed(p, v) && !near_closed(q, v)) return {true, true};
        if (p == v) return {false, true};
        if (q == v) return {true, false};
        const auto d = sym(p, q, {p, q});
        if (d.empty()) return {false, false};
        const VertexId w = d.front();
        const bool w_near_p = adj(p, w);
        const bool drop_near = zero(w);
        // the endpoint adjacent to w is dropped when w is silent, else the other
        const bool ep = w_near_p == drop_near, eq = !ep;
        return {ep, eq};
    }

    // p in S, q not in S.
    Elim one_two_case2(VertexId p, VertexId q, VertexId v) const {
        if (!near_closed(p, v) && !near_closed(q, v)) return {true, false};
        if (p != v) return {true, false};
        const auto d = sym(p, q, {p});
        if (d.size() < 2) return {false, false};
        const VertexId xy[] = {d[0], d[1]};
        for (VertexId x : xy)
            if (adj(p, x) && in_a(x)) return {false, true};
        const int near = adj(p, xy[0]) + adj(p, xy[1]);
        if (near == 2) return {true, false};
        if (near == 1) {
            const VertexId y = adj(p, xy[0]) ? xy[1] : xy[0];
            return in_a(y) ? Elim{true, false} : Elim{false, true};
        }
        const int in = in_a(xy[0]) + in_a(xy[1]);
        if (in == 2) return {true, false};
        return {false, true};
    }

    Elim one_two_case3(VertexId p, VertexId q, VertexId v) const {
        const auto d = sym(p, q, {});
        if (d.size() < 3) return {false, false};
        std::vector<VertexId> xyz(d.begin(), d.begin() + 3);
        auto side = [&](VertexId x) { return std::count_if(xyz.begin(), xyz.end(), [&](VertexId w) { return adj(x, w); }); };
        if (side(p) < side(q)) return swap(one_two_case3_oriented(q, p, v, xyz));
        return one_two_case3_oriented(p, q, v, xyz);
    }

    Elim one_two_case3_oriented(VertexId p, VertexId q, VertexId v, const std::vector<VertexId>& xyz) const {
        if (!adj(p, v) && !adj(q, v)) {
            auto all_in_a = [&](VertexId x) {
                return std::all_of(g_.neighbors(x).begin(), g_.neighbors(x).end(),
                                   [&](VertexId w) { return !in_s(w) || in_a(w); });
            };
            const bool ep = !all_in_a(p), eq = !all_in_a(q);
            if (ep || eq) return {ep, eq};
            return {false, true};
        }
        std::vector<VertexId> near;
        for (VertexId w : xyz)
            if (adj(p, w)) near.push_back(w);
        if (adj(p, v)) {
            const bool silent = std::any_of(near.begin(), near.end(), [&](VertexId w) { return w != v && !in_a(w); });
            return silent ? Elim{true, false} : Elim{false, true};
        }
        const bool heard = std::any_of(near.begin(), near.end(), [&](VertexId w) { return in_a(w); });
        return heard ? Elim{false, true} : Elim{true, false};
    }

    DecodeResult two_twos(VertexId u, VertexId v) const {
        const auto d = sym(u, v, {u, v});
        if (d.empty()) return from_survivors({u, v}, false);
        const VertexId w = d.front();
        const bool at_u = adj(v, w) != in_a(w);
        return {Outcome::Located, {at_u ? u : v}, false};
    }

    const Graph& g_;
    const VertexSet& s_;
    std::vector<Symbol> at_;
    std::vector<VertexId> a_;
    std::vector<VertexId> twos_;
};

std::vector<Symbol> symbols_for_intruder(const Graph& g, const std::vector<VertexId>& detectors,
                                         std::optional<VertexId> intruder) {
    std::vector<Symbol> out(detectors.size());
    for (std::size_t i = 0; i < detectors.size(); ++i) out[i] = expected_symbol(g, intruder, detectors[i]);
    return out;
}

}  // namespace

std::string format_scenario(const Graph& g, const Scenario& sc) {
    std::ostringstream out;
    out << "intruder=" << (sc.intruder ? g.label(*sc.intruder) : "none");
    if (sc.fault) out << " fault=" << g.label(sc.fault->detector) << "->" << int(sc.fault->reported);
    else out << " fault=none";
    return out.str();
}

TransmissionVector simulate(const Graph& g, const VertexSet& s, const Scenario& sc) {
    if (s.empty()) throw InputError("simulation needs at least one detector");
    if (s.universe() != g.order()) throw InputError("detector set does not match the graph");
    if (sc.intruder) g.check_vertex(*sc.intruder);
    auto o = expected_transmissions(g, s, sc.intruder);
    if (sc.fault) {
        const auto [w, reported] = *sc.fault;
        if (w >= g.order() || !s.contains(w)) throw InputError("fault names a non-detector");
        if (reported > kHere) throw InputError("reported symbol must be 0, 1 or 2");
        const auto it = std::lower_bound(o.detectors.begin(), o.detectors.end(), w);
        auto& slot = o.symbols[static_cast<std::size_t>(it - o.detectors.begin())];
        if (slot == reported) throw InputError("faulty report equals the correct symbol");
        slot = reported;
    }
    return o;
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::NoIntruder: return "NO_INTRUDER";
        case Outcome::Located: return "LOCATED";
        case Outcome::Ambiguous: return "AMBIGUOUS";
        case Outcome::Inconsistent: return "INCONSISTENT";
    }
    return "?";
}

std::string format_decode(const Graph& g, const DecodeResult& r) {
    std::string out(outcome_name(r.outcome));
    for (VertexId v : r.candidates) out += " " + g.label(v);
    if (r.none_possible) out += " none";
    return out + "\n";
}

DecodeResult decode_consistency(const Graph& g, const VertexSet& s, const TransmissionVector& o) {
    check_domain(s, o);
    auto close = [&](std::optional<VertexId> p) {
        std::size_t diff = 0;
        for (std::size_t i = 0; i < o.size() && diff <= 1; ++i)
            diff += o.symbols[i] != expected_symbol(g, p, o.detectors[i]);
        return diff <= 1;
    };
    std::vector<VertexId> hits;
    for (VertexId p = 0; p < g.order(); ++p)
        if (close(p)) hits.push_back(p);
    return from_survivors(std::move(hits), close(std::nullopt));
}

DecodeResult decode_elimination(const Graph& g, const VertexSet& s, const TransmissionVector& o) {
    check_domain(s, o);
    return Eliminator(g, s, o).run();
}

DecodeResult truth(const Scenario& sc) {
    if (!sc.intruder) return {Outcome::NoIntruder, {}, false};
    return {Outcome::Located, {*sc.intruder}, false};
}

SweepReport exhaustive_sweep(const Graph& g, const VertexSet& s, std::size_t jobs) {
    if (jobs == 0) throw InputError("jobs must be positive");
    VerifyOptions once;
    once.max_violations = 1;
    if (s.universe() != g.order() || !verify(g, s, Variant::ERR_LD, once).ok)
        throw InputError("sweep needs a verified ERR_LD set");
    const auto detectors = s.members();
    std::vector<std::optional<VertexId>> intruders{std::nullopt};
    for (VertexId v = 0; v < g.order(); ++v) intruders.emplace_back(v);

    SweepReport report;
    std::mutex lock;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        SweepReport local;
        std::vector<Scenario> failures;
        for (std::size_t i; (i = next.fetch_add(1)) < intruders.size();) {
            const auto intruder = intruders[i];
            std::vector<Scenario> cases{{intruder, std::nullopt}};
            const auto clean = symbols_for_intruder(g, detectors, intruder);
            for (std::size_t k = 0; k < detectors.size(); ++k)
                for (Symbol x = 0; x <= kHere; ++x)
                    if (x != clean[k]) cases.push_back({intruder, Fault{detectors[k], x}});
            for (const auto& sc : cases) {
                const auto o = simulate(g, s, sc);
                const auto a = decode_elimination(g, s, o);
                const auto b = decode_consistency(g, s, o);
                const auto want = truth(sc);
                ++local.scenarios;
                local.disagreements += !(a == b);
                if (a == want && b == want) ++local.correct;
                else failures.push_back(sc);
            }
        }
        std::lock_guard guard(lock);
        report.scenarios += local.scenarios;
        report.correct += local.correct;
        report.disagreements += local.disagreements;
        report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const Scenario& a, const Scenario& b) {
        auto key = [](const Scenario& s) {
            return std::tuple(s.intruder.value_or(kMaxVertices), s.fault ? s.fault->detector : kMaxVertices,
                              s.fault ? s.fault->reported : Symbol{0});
        };
        return key(a) < key(b);
    });
    if (report.failures.size() > 10) report.failures.resize(10);
    return report;
}

std::string format_sweep(const SweepReport& r) {
    return "scenarios=" + std::to_string(r.scenarios) + " correct=" + std::to_string(r.correct) +
           " disagreements=" + std::to_string(r.disagreements) + "\n";
}

std::optional<std::pair<Scenario, Scenario>> failure_witness(const Graph& g, const VertexSet& s,
                                                             const Violation& violation) {
    std::optional<VertexId> a, b;
    if (violation.property == 1) {
        b = violation.witnesses.at(0);
    } else {
        a = violation.witnesses.at(0);
        b = violation.witnesses.at(1);
    }
    const auto ea = expected_transmissions(g, s, a), eb = expected_transmissions(g, s, b);
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea.symbols[i] != eb.symbols[i]) diff.push_back(i);
    if (diff.size() > 2) return std::nullopt;
    Scenario sa{a, std::nullopt}, sb{b, std::nullopt};
    if (!diff.empty()) sa.fault = Fault{ea.detectors[diff[0]], eb.symbols[diff[0]]};
    if (diff.size() == 2) sb.fault = Fault{eb.detectors[diff[1]], ea.symbols[diff[1]]};
    return std::pair{sa, sb};
}

std::string format_transmissions(const TransmissionVector& o) {
    std::ostringstream out;
    for (std::size_t i = 0; i < o.size(); ++i) out << o.detectors[i] << ':' << int(o.symbols[i]) << '\n';
    return out.str();
}

TransmissionVector parse_transmissions(std::string_view text) {
    std::map<VertexId, Symbol> values;
    for (const auto& line : content_lines(text)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw InputError("transmissions: expected 'detector:symbol', got '" + line + "'");
        long long w = -1, x = -1;
        try {
            std::size_t used = 0;
            const auto left = line.substr(0, colon), right = line.substr(colon + 1);
            w = std::stoll(left, &used);
            if (used != left.size()) throw std::invalid_argument(left);
            x = std::stoll(right, &used);
            if (used != right.size()) throw std::invalid_argument(right);
        } catch (const std::exception&) {
            throw InputError("transmissions: bad line '" + line + "'");
        }
        if (w < 0 || w >= static_cast<long long>(kMaxVertices)) throw InputError("transmissions: bad detector in '" + line + "'");
        if (x < 0 || x > kHere) throw InputError("transmissions: symbol must be 0, 1 or 2 in '" + line + "'");
        if (!values.emplace(static_cast<VertexId>(w), static_cast<Symbol>(x)).second)
            throw InputError("transmissions: detector " + std::to_string(w) + " repeated");
    }
    TransmissionVector o;
    for (auto [w, x] : values) {
        o.detectors.push_back(w);
        o.symbols.push_back(x);
    }
    return o;
}

}  // namespace faultdom

#include "faultdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "faultdom/error.hpp"
#include "faultdom/io.hpp"

namespace faultdom {

namespace {

using Clock = std::chrono::steady_clock;

enum Status : std::uint8_t { Undecided = 0, In = 1, Out = 2 };

using Decision = std::pair<VertexId, Status>;

// Immutable per-instance data shared by all workers.
struct Problem {
    const Graph& g;
    Variant variant;
    int k;
    std::vector<Edge> pairs;
    std::vector<std::vector<VertexId>> region;  // u, v and both neighbourhoods
    std::vector<std::vector<std::uint32_t>> touch;

    Problem(const Graph& graph, Variant var) : g(graph), variant(var), k(detail::domination_threshold(var)) {
        const auto n = static_cast<VertexId>(g.order());
        touch.resize(n);
        for (VertexId u = 0; u < n; ++u) {
            VertexSet near = g.open_row(u);
            for (VertexId w : g.neighbors(u)) near |= g.open_row(w);
            near.for_each([&](VertexId v) {
                if (v <= u) return;
                VertexSet r = g.open_row(u) | g.open_row(v);
                r.insert(u);
                r.insert(v);
                const auto id = static_cast<std::uint32_t>(pairs.size());
                pairs.emplace_back(u, v);
                region.push_back(r.members());
                for (VertexId w : region.back()) touch[w].push_back(id);
            });
        }
    }
};

struct Shared {
    std::mutex mutex;
    std::atomic<std::size_t> best;
    DetectorSet witness;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stopped{false};
    std::uint64_t node_budget;
    Clock::time_point deadline;

    void offer(const VertexSet& s) {
        std::lock_guard lock(mutex);
        if (s.count() < best.load()) {
            witness = DetectorSet(s);
            best.store(s.count());
        }
    }
};

class Search {
public:
    Search(const Problem& p, Shared& shared)
        : p_(p),
          sh_(shared),
          n_(static_cast<VertexId>(p.g.order())),
          status_(n_, Undecided),
          in_(n_),
          cand_(VertexSet::full(n_)),
          in_cnt_(n_, 0),
          cand_cnt_(n_),
          queued_(n_ + p.pairs.size(), 0),
          scratch_(n_) {
        for (VertexId v = 0; v < n_; ++v) cand_cnt_[v] = static_cast<int>(p.g.degree(v)) + 1;
        for (std::uint32_t id = 0; id < queued_.size(); ++id) push(id);
    }

    bool replay(const std::vector<Decision>& path) {
        if (!propagate()) return false;
        for (auto [w, st] : path)
            if (!assign(w, st) || !propagate()) return false;
        return true;
    }

    void dfs() {
        if (sh_.stopped.load(std::memory_order_relaxed)) return;
        if (!count_node()) return;
        if (!propagate()) return;
        if (in_.count() + bound() >= sh_.best.load()) return;
        const auto w = branch_vertex();
        if (!w) return;
        for (Status st : {In, Out}) {
            const auto mark = trail_.size();
            if (assign(*w, st)) dfs();
            undo_to(mark);
            if (sh_.stopped.load(std::memory_order_relaxed)) return;
        }
    }

    // Expands the tree to `depth` levels and returns the open subproblems.
    void split(std::size_t depth, std::vector<Decision>& path, std::vector<std::vector<Decision>>& out) {
        if (!propagate()) return;
        if (in_.count() + bound() >= sh_.best.load()) return;
        if (depth == 0) {
            out.push_back(path);
            return;
        }
        const auto w = branch_vertex();
        if (!w) return;
        for (Status st : {In, Out}) {
            const auto mark = trail_.size();
            path.emplace_back(*w, st);
            if (assign(*w, st)) split(depth - 1, path, out);
            path.pop_back();
            undo_to(mark);
        }
    }

private:
    bool count_node() {
        const auto done = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (done >= sh_.node_budget || ((done & 1023) == 0 && Clock::now() > sh_.deadline)) {
            sh_.stopped.store(true);
            return false;
        }
        return true;
    }

    void push(std::uint32_t id) {
        if (queued_[id]) return;
        queued_[id] = 1;
        work_.push_back(id);
    }

    bool assign(VertexId w, Status st) {
        if (status_[w] == st) return true;
        if (status_[w] != Undecided) return false;
        status_[w] = st;
        trail_.push_back(w);
        const auto touch_closed = [&](auto&& f) {
            f(w);
            for (VertexId x : p_.g.neighbors(w)) f(x);
        };
        if (st == In) {
            in_.insert(w);
            touch_closed([&](VertexId x) { ++in_cnt_[x]; push(x); });
        } else {
            cand_.erase(w);
            touch_closed([&](VertexId x) { --cand_cnt_[x]; push(x); });
        }
        for (auto id : p_.touch[w]) push(n_ + id);
        return true;
    }

    void undo_to(std::size_t mark) {
        for (auto id : work_) queued_[id] = 0;
        work_.clear();
        while (trail_.size() > mark) {
            const VertexId w = trail_.back();
            trail_.pop_back();
            const int d_in = status_[w] == In ? 1 : 0;
            const int d_cand = status_[w] == Out ? 1 : 0;
            if (d_in) in_.erase(w);
            if (d_cand) cand_.insert(w);
            in_cnt_[w] -= d_in;
            cand_cnt_[w] += d_cand;
            for (VertexId x : p_.g.neighbors(w)) {
                in_cnt_[x] -= d_in;
                cand_cnt_[x] += d_cand;
            }
            status_[w] = Undecided;
        }
    }

    bool propagate() {
        while (!work_.empty()) {
            const auto id = work_.back();
            work_.pop_back();
            queued_[id] = 0;
            const bool ok = id < n_ ? propagate_vertex(id) : propagate_pair(id - n_);
            if (!ok) {
                for (auto rest : work_) queued_[rest] = 0;
                work_.clear();
                return false;
            }
        }
        return true;
    }

    bool propagate_vertex(VertexId v) {
        if (cand_cnt_[v] < p_.k) return false;
        if (cand_cnt_[v] == p_.k && in_cnt_[v] < p_.k) {
            if (status_[v] == Undecided && !assign(v, In)) return false;
            for (VertexId x : p_.g.neighbors(v))
                if (status_[x] == Undecided && !assign(x, In)) return false;
        }
        return true;
    }

    // Does the pair condition hold with detectors `base`, u and v set as given?
    bool holds(const VertexSet& base, VertexId u, bool u_in, VertexId v, bool v_in) {
        scratch_ = base;
        scratch_.assign(u, u_in);
        scratch_.assign(v, v_in);
        return !detail::check_pair(p_.g, scratch_.words(), u, u_in, v, v_in, p_.variant).property;
    }

    bool propagate_pair(std::uint32_t id) {
        const auto [u, v] = p_.pairs[id];
        int feasible = 0;
        bool u_can[2] = {false, false}, v_can[2] = {false, false};
        for (int a = 0; a < 2; ++a) {
            if (status_[u] != Undecided && (status_[u] == In) != (a == 1)) continue;
            for (int b = 0; b < 2; ++b) {
                if (status_[v] != Undecided && (status_[v] == In) != (b == 1)) continue;
                if (holds(cand_, u, a, v, b)) {
                    ++feasible;
                    u_can[a] = v_can[b] = true;
                }
            }
        }
        if (!feasible) return false;
        if (!u_can[0] && !assign(u, In)) return false;
        if (!u_can[1] && !assign(u, Out)) return false;
        if (!v_can[0] && !assign(v, In)) return false;
        if (!v_can[1] && !assign(v, Out)) return false;
        if (feasible != 1) return true;
        const bool ui = status_[u] == In, vi = status_[v] == In;
        if (holds(in_, u, ui, v, vi)) return true;
        for (VertexId w : p_.region[id]) {
            if (w == u || w == v || status_[w] != Undecided) continue;
            cand_.erase(w);
            const bool without = holds(cand_, u, ui, v, vi);
            cand_.insert(w);
            if (!without && !assign(w, In)) return false;
        }
        return true;
    }

    std::size_t bound() {
        std::size_t total = 0;
        needy_.clear();
        for (VertexId v = 0; v < n_; ++v) {
            const int r = p_.k - in_cnt_[v];
            if (r > 0) {
                total += static_cast<std::size_t>(r);
                needy_.push_back(v);
            }
        }
        if (!total) return 0;

        cover_.clear();
        for (VertexId w = 0; w < n_; ++w) {
            if (status_[w] != Undecided) continue;
            int c = in_cnt_[w] < p_.k;
            for (VertexId x : p_.g.neighbors(w)) c += in_cnt_[x] < p_.k;
            if (c) cover_.push_back(c);
        }
        std::sort(cover_.begin(), cover_.end(), std::greater<>());
        std::size_t counting = 0, covered = 0;
        while (covered < total && counting < cover_.size()) covered += static_cast<std::size_t>(cover_[counting++]);
        if (covered < total) return n_ + 1;

        std::stable_sort(needy_.begin(), needy_.end(),
                         [&](VertexId a, VertexId b) { return in_cnt_[a] < in_cnt_[b]; });
        used_ = VertexSet(n_);
        std::size_t disjoint = 0;
        for (VertexId v : needy_) {
            bool clash = used_.contains(v) && status_[v] == Undecided;
            for (VertexId x : p_.g.neighbors(v)) clash = clash || (status_[x] == Undecided && used_.contains(x));
            if (clash) continue;
            disjoint += static_cast<std::size_t>(p_.k - in_cnt_[v]);
            if (status_[v] == Undecided) used_.insert(v);
            for (VertexId x : p_.g.neighbors(v))
                if (status_[x] == Undecided) used_.insert(x);
        }
        return std::max(counting, disjoint);
    }

    VertexId lowest_undecided_closed(VertexId v) const {
        VertexId best = status_[v] == Undecided ? v : n_;
        for (VertexId x : p_.g.neighbors(v))
            if (status_[x] == Undecided) best = std::min(best, x);
        return best;
    }

    // Next branching vertex; nullopt when the node is closed (leaf handled).
    std::optional<VertexId> branch_vertex() {
        VertexId tight = n_;
        int slack = 0;
        for (VertexId v = 0; v < n_; ++v) {
            if (in_cnt_[v] >= p_.k) continue;
            const int s = cand_cnt_[v] - p_.k;
            if (tight == n_ || s < slack) {
                tight = v;
                slack = s;
            }
        }
        if (tight != n_) {
            const VertexId w = lowest_undecided_closed(tight);
            if (w == n_) return std::nullopt;
            return w;
        }
        VerifyOptions once;
        once.max_violations = 1;
        const auto verdict = verify(p_.g, in_, p_.variant, once);
        if (verdict.ok) {
            sh_.offer(in_);
            return std::nullopt;
        }
        const auto& wit = verdict.violations.front().witnesses;
        VertexId w = n_;
        for (VertexId x : wit) w = std::min(w, lowest_undecided_closed(x));
        if (w == n_) return std::nullopt;
        return w;
    }

    const Problem& p_;
    Shared& sh_;
    VertexId n_;
    std::vector<std::uint8_t> status_;
    VertexSet in_, cand_;
    std::vector<int> in_cnt_, cand_cnt_;
    std::vector<VertexId> trail_;
    std::vector<std::uint32_t> work_;
    std::vector<std::uint8_t> queued_;
    VertexSet scratch_, used_;
    std::vector<VertexId> needy_;
    std::vector<int> cover_;
};

[[noreturn]] void no_solution(Variant variant) {
    throw NoSolutionError("no " + std::string(variant_name(variant)) + " set exists on this graph" +
                          (variant == Variant::ERR_LD ? " (needs min degree >= 2 and no twins)" : ""));
}

}  // namespace

SolveResult exact_min(const Graph& g, Variant variant, const SearchConfig& config) {
    if (config.node_budget == 0 || config.time_budget <= 0 || config.parallel_width == 0)
        throw InputError("search budgets and width must be positive");
    if (!variant_exists(g, variant)) no_solution(variant);

    DetectorSet incumbent;
    if (config.hint) {
        if (config.hint->universe() != g.order() || !verify(g, *config.hint, variant).ok)
            throw InputError("hint is not a valid " + std::string(variant_name(variant)) + " set");
        incumbent = *config.hint;
    } else {
        incumbent = greedy_upper(g, variant);
    }

    const Problem problem(g, variant);
    Shared shared;
    shared.best.store(incumbent.count());
    shared.witness = incumbent;
    shared.node_budget = config.node_budget;
    const auto seconds = std::chrono::duration<double>(std::min(config.time_budget, 1e7));
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(seconds);

    if (config.parallel_width == 1) {
        Search(problem, shared).dfs();
    } else {
        std::size_t depth = 0;
        while ((std::size_t{1} << depth) < 8 * config.parallel_width && depth < 12) ++depth;
        std::vector<std::vector<Decision>> tasks;
        {
            Search root(problem, shared);
            std::vector<Decision> path;
            root.split(depth, path, tasks);
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < config.parallel_width; ++t)
            workers.emplace_back([&] {
                for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                    Search s(problem, shared);
                    if (s.replay(tasks[i])) s.dfs();
                }
            });
        for (auto& w : workers) w.join();
    }

    SolveResult r;
    r.variant = variant;
    r.witness = shared.witness;
    r.optimum = r.witness.count();
    r.nodes_explored = shared.nodes.load();
    r.proved_optimal = !shared.stopped.load();
    return r;
}

DetectorSet greedy_upper(const Graph& g, Variant variant) {
    if (!variant_exists(g, variant)) no_solution(variant);
    const auto n = static_cast<VertexId>(g.order());
    const int k = detail::domination_threshold(variant);
    DetectorSet s(n);

    while (true) {
        VertexId pick = n;
        int best = 0;
        for (VertexId w = 0; w < n; ++w) {
            if (s.contains(w)) continue;
            int gain = static_cast<int>(domination_count(g, s, w)) < k;
            for (VertexId x : g.neighbors(w)) gain += static_cast<int>(domination_count(g, s, x)) < k;
            if (gain > best) {
                best = gain;
                pick = w;
            }
        }
        if (pick == n) break;
        s.insert(pick);
    }

    VerifyOptions all;
    all.max_violations = SIZE_MAX;
    while (true) {
        const auto verdict = verify(g, s, variant, all);
        if (verdict.ok) break;
        const auto base = verdict.violations.size();
        VertexId pick = n;
        std::size_t best = 0;
        for (VertexId w = 0; w < n; ++w) {
            if (s.contains(w)) continue;
            s.insert(w);
            const auto after = verify(g, s, variant, all).violations.size();
            s.erase(w);
            if (after < base && base - after > best) {
                best = base - after;
                pick = w;
            }
        }
        if (pick == n) {
            for (VertexId x : verdict.violations.front().witnesses) {
                VertexSet near = g.closed_neighborhood(x) - s;
                if (!near.empty()) pick = std::min(pick, near.members().front());
            }
        }
        if (pick == n) throw std::logic_error("greedy_upper: violation with no repairing vertex");
        s.insert(pick);
    }
    return s;
}

DetectorSet packing_complement(const Graph& g, const VertexSet& packing) {
    if (packing.universe() != g.order()) throw InputError("packing universe does not match graph order");
    if (!g.is_regular(3)) throw InputError("graph is not cubic");
    if (const auto twins = find_twins(g); !twins.empty())
        throw InputError("graph has twins " + std::to_string(twins[0].first) + " " + std::to_string(twins[0].second));
    const auto members = packing.members();
    for (VertexId x : members) {
        const auto dist = bfs_distances(g, x);
        for (VertexId y : members)
            if (y > x && dist[y] < 5)
                throw InputError("packing vertices " + std::to_string(x) + " " + std::to_string(y) + " at distance " +
                                 std::to_string(dist[y]));
    }
    DetectorSet s(packing.complement());
    if (!verify(g, s, Variant::ERR_LD).ok) throw std::logic_error("packing complement failed ERR_LD verification");
    return s;
}

VertexSet greedy_distance5_packing(const Graph& g) {
    const auto n = static_cast<VertexId>(g.order());
    VertexSet packing(n), blocked(n);
    for (VertexId v = 0; v < n; ++v) {
        if (blocked.contains(v)) continue;
        packing.insert(v);
        for (VertexId w : ball(g, v, 4)) blocked.insert(w);
    }
    return packing;
}

std::string format_solve_result(const SolveResult& r) {
    std::ostringstream out;
    out << variant_name(r.variant) << ' ' << r.optimum << ' ' << (r.proved_optimal ? "proved" : "unproved") << ' '
        << r.nodes_explored << '\n'
        << format_detector_set(r.witness);
    return out.str();
}

}  // namespace faultdom

#include "faultdom/grids.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>

#include "faultdom/error.hpp"
#include "faultdom/io.hpp"

namespace faultdom {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (d < 0) n = -n, d = -d;
    const auto g = std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

namespace {

std::size_t round_up(std::size_t value, std::size_t step) { return (value + step - 1) / step * step; }

// Translations of the cell that are lattice automorphisms.
std::vector<Cell> allowed_shifts(LatticeKind lattice, std::size_t pr, std::size_t pc) {
    std::vector<Cell> out;
    for (std::size_t dr = 0; dr < pr; ++dr)
        for (std::size_t dc = 0; dc < pc; ++dc) {
            if (lattice == LatticeKind::LADDER && dr != 0) continue;
            // HEX: some lift (dr + a*pr, dc + b*pc) must have even coordinate sum
            if (lattice == LatticeKind::HEX && pr % 2 == 0 && pc % 2 == 0 && (dr + dc) % 2 != 0) continue;
            out.emplace_back(dr, dc);
        }
    return out;
}

std::uint64_t shift_mask(std::uint64_t m, std::size_t pr, std::size_t pc, Cell shift) {
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < pr; ++r)
        for (std::size_t c = 0; c < pc; ++c)
            if ((m >> (r * pc + c)) & 1)
                out |= std::uint64_t{1} << (((r + shift.first) % pr) * pc + (c + shift.second) % pc);
    return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

PeriodicPattern pattern_from_mask(LatticeKind lattice, std::size_t pr, std::size_t pc, std::uint64_t m) {
    std::vector<Cell> offsets;
    for (std::size_t i = 0; i < pr * pc; ++i)
        if ((m >> i) & 1) offsets.emplace_back(i / pc, i % pc);
    return make_pattern(lattice, pr, pc, std::move(offsets));
}

struct Level {
    Rational density;
    std::size_t pr, pc, k;
};

}  // namespace

PeriodicPattern make_pattern(LatticeKind lattice, std::size_t pr, std::size_t pc, std::vector<Cell> offsets) {
    if (pr == 0 || pc == 0) throw InputError("pattern period must be positive");
    if (pr > kMaxVertices || pc > kMaxVertices / pr) throw InputError("pattern period too large");
    if (lattice == LatticeKind::LADDER && pr != 1 && pr != 2) throw InputError("LADDER pattern needs 1 or 2 rows");
    if (offsets.empty()) throw InputError("pattern has no detectors");
    for (auto [r, c] : offsets)
        if (r >= pr || c >= pc)
            throw InputError("offset " + std::to_string(r) + " " + std::to_string(c) + " outside the " +
                             std::to_string(pr) + "x" + std::to_string(pc) + " cell");
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    return {lattice, pr, pc, std::move(offsets)};
}

Rational pattern_density(const PeriodicPattern& p) {
    if (p.offsets.empty()) throw InputError("pattern has no detectors");
    return {static_cast<std::int64_t>(p.offsets.size()), static_cast<std::int64_t>(p.pr * p.pc)};
}

PeriodicPattern parse_pattern(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw InputError("pattern: missing 'lattice pr pc' header");
    std::istringstream header(lines[0]);
    std::string name;
    long long pr = 0, pc = 0;
    if (!(header >> name >> pr >> pc) || pr <= 0 || pc <= 0)
        throw InputError("pattern: header must be 'lattice pr pc'");
    std::vector<Cell> offsets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        long long r = -1, c = -1;
        std::string extra;
        if (!(in >> r >> c) || (in >> extra) || r < 0 || c < 0)
            throw InputError("pattern: bad offset line '" + lines[i] + "'");
        offsets.emplace_back(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
    return make_pattern(parse_lattice(name), static_cast<std::size_t>(pr), static_cast<std::size_t>(pc),
                        std::move(offsets));
}

std::string format_pattern(const PeriodicPattern& p) {
    std::ostringstream out;
    out << lattice_name(p.lattice) << ' ' << p.pr << ' ' << p.pc << '\n';
    for (auto [r, c] : p.offsets) out << r << ' ' << c << '\n';
    return out.str();
}

Cell certification_dims(const PeriodicPattern& p) {
    Cell dims;
    switch (p.lattice) {
        case LatticeKind::LADDER: dims = {2, round_up(6, p.pc)}; break;
        case LatticeKind::HEX: dims = {round_up(5, std::lcm(p.pr, 2)), round_up(5, std::lcm(p.pc, 2))}; break;
        default: dims = {round_up(5, p.pr), round_up(5, p.pc)}; break;
    }
    if (dims.first > kMaxVertices || dims.second > kMaxVertices / dims.first)
        throw InputError("certification torus too large");
    return dims;
}

DetectorSet tile(const PeriodicPattern& p, std::size_t rows, std::size_t cols) {
    if (rows % p.pr != 0 || cols % p.pc != 0) throw InputError("torus dimensions must be multiples of the period");
    DetectorSet s(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (std::binary_search(p.offsets.begin(), p.offsets.end(), Cell{r % p.pr, c % p.pc}))
                s.insert(static_cast<VertexId>(r * cols + c));
    return s;
}

Certification certify_pattern(const PeriodicPattern& p, const VerifyOptions& options) {
    if (p.offsets.empty()) throw InputError("pattern has no detectors");
    const auto [rows, cols] = certification_dims(p);
    const auto g = make_torus(p.lattice, rows, cols);
    Certification out;
    out.rows = rows;
    out.cols = cols;
    out.verdict = verify(g, tile(p, rows, cols), Variant::ERR_LD, options);
    out.ok = out.verdict.ok;
    return out;
}

Rational density_lower_bound(LatticeKind lattice) {
    return {3, static_cast<std::int64_t>(lattice_degree(lattice) + 1)};
}

std::optional<PeriodicPattern> search_min_pattern(LatticeKind lattice, std::size_t max_pr, std::size_t max_pc,
                                                  std::size_t jobs) {
    if (max_pr * max_pc > 36) throw InputError("pattern search limited to cells of at most 36 vertices");
    if (jobs == 0) throw InputError("jobs must be positive");
    const auto bound = density_lower_bound(lattice);
    std::vector<Level> levels;
    for (std::size_t pr = 1; pr <= max_pr; ++pr) {
        if (lattice == LatticeKind::LADDER && pr != 2) continue;
        for (std::size_t pc = 1; pc <= max_pc; ++pc)
            for (std::size_t k = 1; k <= pr * pc; ++k) {
                const Rational d(static_cast<std::int64_t>(k), static_cast<std::int64_t>(pr * pc));
                if (d >= bound) levels.push_back({d, pr, pc, k});
            }
    }
    std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
        if (a.density != b.density) return a.density < b.density;
        if (a.pr * a.pc != b.pr * b.pc) return a.pr * a.pc < b.pr * b.pc;
        return a.pr < b.pr;
    });

    VerifyOptions once;
    once.max_violations = 1;
    for (const auto& level : levels) {
        const auto n = level.pr * level.pc;
        const auto shifts = allowed_shifts(lattice, level.pr, level.pc);
        std::vector<std::uint64_t> candidates;
        std::vector<std::size_t> idx(level.k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        do {
            std::uint64_t m = 0;
            for (auto i : idx) m |= std::uint64_t{1} << i;
            const bool least = std::all_of(shifts.begin(), shifts.end(), [&](Cell s) {
                return shift_mask(m, level.pr, level.pc, s) >= m;
            });
            if (least) candidates.push_back(m);
        } while (next_combination(idx, n));

        const auto probe = pattern_from_mask(lattice, level.pr, level.pc, candidates.front());
        const auto [rows, cols] = certification_dims(probe);
        const auto g = make_torus(lattice, rows, cols);
        std::atomic<std::size_t> best{candidates.size()};
        auto work = [&](std::size_t start) {
            for (std::size_t i = start; i < candidates.size() && i < best.load(); i += jobs) {
                const auto p = pattern_from_mask(lattice, level.pr, level.pc, candidates[i]);
                if (!verify(g, tile(p, rows, cols), Variant::ERR_LD, once).ok) continue;
                auto cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        }
        if (best.load() < candidates.size())
            return pattern_from_mask(lattice, level.pr, level.pc, candidates[best.load()]);
    }
    return std::nullopt;
}

PeriodicPattern ladder_pattern() {
    return make_pattern(LatticeKind::LADDER, 2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}});
}

PeriodicPattern ladder_pattern_literal() {
    return make_pattern(LatticeKind::LADDER, 2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}});
}

PeriodicPattern reference_pattern(LatticeKind lattice) {
    switch (lattice) {
        case LatticeKind::SQ: return make_pattern(lattice, 2, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}});
        case LatticeKind::TRI: return make_pattern(lattice, 1, 2, {{0, 0}});
        case LatticeKind::HEX: return make_pattern(lattice, 2, 4, {{0, 0}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}});
        case LatticeKind::KING:
            return make_pattern(lattice, 4, 4, {{0, 0}, {0, 1}, {0, 3}, {1, 2}, {2, 1}, {2, 3}, {3, 0}});
        case LatticeKind::LADDER: return ladder_pattern();
    }
    throw InputError("unknown lattice");
}

Rational quoted_upper_bound(LatticeKind lattice) {
    switch (lattice) {
        case LatticeKind::SQ: return {2, 3};
        case LatticeKind::TRI: return {1, 2};
        case LatticeKind::HEX: return {3, 4};
        case LatticeKind::KING: return {7, 16};
        case LatticeKind::LADDER: return {5, 6};
    }
    throw InputError("unknown lattice");
}

TreeConstruction build_tree3_errld(std::size_t radius) {
    if (radius < 3) throw InputError("tree construction needs radius >= 3");
    TreeConstruction t;
    t.graph = make_family(Family::Tree3Ball, radius);
    t.depth = tree3_depths(radius);
    const auto n = t.graph.order();
    t.detectors = DetectorSet(n);
    std::vector<char> visited(n, 0);
    std::deque<VertexId> queue;
    visited[0] = 1;
    for (VertexId w : t.graph.neighbors(0)) {
        t.detectors.insert(w);
        visited[w] = 1;
        queue.push_back(w);
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        std::size_t have = domination_count(t.graph, t.detectors, v);
        for (VertexId w : t.graph.neighbors(v)) {
            if (visited[w]) continue;
            if (have < 3) {
                t.detectors.insert(w);
                ++have;
            }
            visited[w] = 1;
            queue.push_back(w);
        }
    }
    t.interior = VertexSet(n);
    std::size_t inside = 0, in_s = 0;
    for (VertexId v = 0; v < n; ++v)
        if (t.depth[v] + 2 <= radius) {
            t.interior.insert(v);
            ++inside;
            in_s += t.detectors.contains(v);
        }
    VerifyOptions options;
    options.max_violations = SIZE_MAX;
    options.scope = &t.interior;
    t.interior_verdict = verify(t.graph, t.detectors, Variant::ERR_LD, options);
    t.interior_density = Rational(static_cast<std::int64_t>(in_s), static_cast<std::int64_t>(inside));
    return t;
}

std::vector<SquareExampleMatch> find_square_example(const PeriodicPattern& p) {
    if (p.lattice != LatticeKind::SQ) throw InputError("the worked example is on SQ");
    std::vector<SquareExampleMatch> out;
    for (int transposed = 0; transposed < 2; ++transposed)
        for (std::size_t sr = 0; sr < p.pr; ++sr)
            for (std::size_t sc = 0; sc < p.pc; ++sc) {
                // label -> lattice point
                auto at = [&](char letter, int number) {
                    long row = number - 1, col = letter - 'a';
                    if (transposed) std::swap(row, col);
                    return std::pair<long, long>{row + static_cast<long>(sr), col + static_cast<long>(sc)};
                };
                auto det = [&](std::pair<long, long> x) {
                    const auto pr = static_cast<long>(p.pr), pc = static_cast<long>(p.pc);
                    const auto r = static_cast<std::size_t>((x.first % pr + pr) % pr);
                    const auto c = static_cast<std::size_t>((x.second % pc + pc) % pc);
                    return std::binary_search(p.offsets.begin(), p.offsets.end(), Cell{r, c});
                };
                auto closed = [&](std::pair<long, long> x) {
                    std::vector<std::pair<long, long>> s;
                    const std::pair<long, long> around[] = {
                        x, {x.first - 1, x.second}, {x.first + 1, x.second}, {x.first, x.second - 1},
                        {x.first, x.second + 1}};
                    for (auto y : around)
                        if (det(y)) s.push_back(y);
                    std::sort(s.begin(), s.end());
                    return s;
                };
                auto distinguished = [&](std::pair<long, long> u, std::pair<long, long> v) {
                    std::vector<std::pair<long, long>> a = closed(u), b = closed(v), d;
                    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
                    return static_cast<std::size_t>(
                        std::count_if(d.begin(), d.end(), [&](auto y) { return y != u && y != v; }));
                };
                const auto c3 = at('c', 3), c4 = at('c', 4), d3 = at('d', 3), d4 = at('d', 4);
                if (det(c3) && det(c4) && !det(d3) && !det(d4) && distinguished(c3, c4) == 2 &&
                    distinguished(d3, d4) == 6)
                    out.push_back({sr, sc, transposed != 0});
            }
    return out;
}

}  // namespace faultdom

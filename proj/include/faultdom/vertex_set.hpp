#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace faultdom {

using VertexId = std::uint32_t;

/// Dense bitset over the vertex universe [0, n).
///
/// Bits past `universe()` in the last word are always zero, so word-level
/// popcounts never need a tail mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(std::size_t n);
    /// Throws InputError when a member is >= n.
    static VertexSet of(std::size_t n, std::span<const VertexId> members);

    std::size_t universe() const { return n_; }
    std::size_t word_count() const { return words_.size(); }

    bool contains(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void assign(VertexId v, bool on) { on ? insert(v) : erase(v); }

    std::size_t count() const;
    bool empty() const;
    std::vector<VertexId> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator^=(const VertexSet& o);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o);
    VertexSet complement() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void clear_tail();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

/// Sensor placement S over a specific graph.
class DetectorSet : public VertexSet {
public:
    DetectorSet() = default;
    explicit DetectorSet(std::size_t n) : VertexSet(n) {}
    explicit DetectorSet(VertexSet bits) : VertexSet(std::move(bits)) {}

    static DetectorSet all(std::size_t n) { return DetectorSet(VertexSet::full(n)); }
    static DetectorSet of(std::size_t n, std::span<const VertexId> members) {
        return DetectorSet(VertexSet::of(n, members));
    }

    std::size_t size() const { return count(); }
};

}  // namespace faultdom

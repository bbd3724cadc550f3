#include "faultdom/vertex_set.hpp"

#include <string>

#include "faultdom/error.hpp"
#include "faultdom/simd/bitops.hpp"

namespace faultdom {

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.clear_tail();
    return s;
}

VertexSet VertexSet::of(std::size_t n, std::span<const VertexId> members) {
    VertexSet s(n);
    for (VertexId v : members) {
        if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        s.insert(v);
    }
    return s;
}

std::size_t VertexSet::count() const { return simd::active().popcount(words_); }

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.clear_tail();
    return s;
}

void VertexSet::clear_tail() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

}  // namespace faultdom

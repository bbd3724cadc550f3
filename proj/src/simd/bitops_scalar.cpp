#include "faultdom/simd/bitops.hpp"

#include <bit>

namespace faultdom::simd {
namespace {

std::size_t popcount(Words a) {
    std::size_t c = 0;
    for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t popcount_and(Words a, Words b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

std::size_t popcount_and3(Words a, Words b, Words m) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i] & m[i]));
    return c;
}

std::size_t popcount_xor_and(Words a, Words b, Words m) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount((a[i] ^ b[i]) & m[i]));
    return c;
}

std::size_t popcount_andnot_and(Words a, Words b, Words m) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i] & m[i]));
    return c;
}

constexpr Kernels kScalar{Isa::Scalar,     popcount,         popcount_and, popcount_and3,
                          popcount_xor_and, popcount_andnot_and};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace faultdom::simd

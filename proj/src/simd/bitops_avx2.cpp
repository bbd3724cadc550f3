// Compiled with -mavx2 only for this translation unit; callers reach these
// kernels exclusively through avx2_kernels() after a CPUID check.
#include "faultdom/simd/bitops.hpp"

#include <bit>

#if defined(__AVX2__)
#include <immintrin.h>

namespace faultdom::simd {
namespace {

// Nibble-lookup popcount (Mula): per-byte counts via pshufb, folded into
// four 64-bit lane sums with psadbw.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

template <class Combine, class Tail>
std::size_t reduce(std::size_t words, Combine combine, Tail tail) {
    __m256i acc = _mm256_setzero_si256();
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(combine(i)), zero));
    std::size_t c = horizontal_sum(acc);
    for (; i < words; ++i) c += static_cast<std::size_t>(std::popcount(tail(i)));
    return c;
}

std::size_t popcount(Words a) {
    return reduce(
        a.size(), [&](std::size_t i) { return load(a.data() + i); }, [&](std::size_t i) { return a[i]; });
}

std::size_t popcount_and(Words a, Words b) {
    return reduce(
        a.size(), [&](std::size_t i) { return _mm256_and_si256(load(a.data() + i), load(b.data() + i)); },
        [&](std::size_t i) { return a[i] & b[i]; });
}

std::size_t popcount_and3(Words a, Words b, Words m) {
    return reduce(
        a.size(),
        [&](std::size_t i) {
            return _mm256_and_si256(_mm256_and_si256(load(a.data() + i), load(b.data() + i)), load(m.data() + i));
        },
        [&](std::size_t i) { return a[i] & b[i] & m[i]; });
}

std::size_t popcount_xor_and(Words a, Words b, Words m) {
    return reduce(
        a.size(),
        [&](std::size_t i) {
            return _mm256_and_si256(_mm256_xor_si256(load(a.data() + i), load(b.data() + i)), load(m.data() + i));
        },
        [&](std::size_t i) { return (a[i] ^ b[i]) & m[i]; });
}

std::size_t popcount_andnot_and(Words a, Words b, Words m) {
    return reduce(
        a.size(),
        // andnot(x, y) = ~x & y
        [&](std::size_t i) {
            return _mm256_and_si256(_mm256_andnot_si256(load(b.data() + i), load(a.data() + i)), load(m.data() + i));
        },
        [&](std::size_t i) { return a[i] & ~b[i] & m[i]; });
}

constexpr Kernels kAvx2{Isa::Avx2, popcount, popcount_and, popcount_and3, popcount_xor_and, popcount_andnot_and};

}  // namespace

const Kernels* avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

}  // namespace faultdom::simd

#else

namespace faultdom::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace faultdom::simd

#endif

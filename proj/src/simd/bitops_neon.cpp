#include "faultdom/simd/bitops.hpp"

#include <bit>

#if defined(__ARM_NEON) && defined(__aarch64__)
#include <arm_neon.h>

namespace faultdom::simd {
namespace {

template <class Combine, class Tail>
std::size_t reduce(std::size_t words, Combine combine, Tail tail) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(combine(i)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
    }
    std::size_t c = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    for (; i < words; ++i) c += static_cast<std::size_t>(std::popcount(tail(i)));
    return c;
}

std::size_t popcount(Words a) {
    return reduce(
        a.size(), [&](std::size_t i) { return vld1q_u64(a.data() + i); }, [&](std::size_t i) { return a[i]; });
}

std::size_t popcount_and(Words a, Words b) {
    return reduce(
        a.size(), [&](std::size_t i) { return vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)); },
        [&](std::size_t i) { return a[i] & b[i]; });
}

std::size_t popcount_and3(Words a, Words b, Words m) {
    return reduce(
        a.size(),
        [&](std::size_t i) {
            return vandq_u64(vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)), vld1q_u64(m.data() + i));
        },
        [&](std::size_t i) { return a[i] & b[i] & m[i]; });
}

std::size_t popcount_xor_and(Words a, Words b, Words m) {
    return reduce(
        a.size(),
        [&](std::size_t i) {
            return vandq_u64(veorq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)), vld1q_u64(m.data() + i));
        },
        [&](std::size_t i) { return (a[i] ^ b[i]) & m[i]; });
}

std::size_t popcount_andnot_and(Words a, Words b, Words m) {
    return reduce(
        a.size(),
        // vbicq(x, y) = x & ~y
        [&](std::size_t i) {
            return vandq_u64(vbicq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)), vld1q_u64(m.data() + i));
        },
        [&](std::size_t i) { return a[i] & ~b[i] & m[i]; });
}

constexpr Kernels kNeon{Isa::Neon, popcount, popcount_and, popcount_and3, popcount_xor_and, popcount_andnot_and};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace faultdom::simd

#else

namespace faultdom::simd {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace faultdom::simd

#endif

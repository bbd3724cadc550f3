#include <doctest.h>

#include <random>
#include <vector>

#include "faultdom/simd/bitops.hpp"

using namespace faultdom::simd;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t len) {
    std::vector<std::uint64_t> w(len);
    for (auto& x : w) x = rng();
    return w;
}

void check_same(const Kernels& ref, const Kernels& alt) {
    std::mt19937_64 rng(7);
    for (std::size_t len = 0; len <= 37; ++len) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_words(rng, len);
            const auto b = random_words(rng, len);
            const auto m = random_words(rng, len);
            CHECK(ref.popcount(a) == alt.popcount(a));
            CHECK(ref.popcount_and(a, b) == alt.popcount_and(a, b));
            CHECK(ref.popcount_and3(a, b, m) == alt.popcount_and3(a, b, m));
            CHECK(ref.popcount_xor_and(a, b, m) == alt.popcount_xor_and(a, b, m));
            CHECK(ref.popcount_andnot_and(a, b, m) == alt.popcount_andnot_and(a, b, m));
        }
    }
}

}  // namespace

TEST_CASE("scalar kernels match a bit-by-bit count") {
    const auto& k = scalar_kernels();
    std::vector<std::uint64_t> a{0xFFu, 0x1u, 0x8000000000000000ull};
    std::vector<std::uint64_t> b{0x0Fu, 0x1u, 0x0u};
    std::vector<std::uint64_t> m{0xF3u, 0x0u, ~0ull};
    CHECK(k.popcount(a) == 10);
    CHECK(k.popcount_and(a, b) == 5);
    CHECK(k.popcount_and3(a, b, m) == 2);
    CHECK(k.popcount_xor_and(a, b, m) == 5);
    CHECK(k.popcount_andnot_and(a, b, m) == 5);
    CHECK(k.popcount(std::vector<std::uint64_t>{}) == 0);
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const auto& ref = scalar_kernels();
    int checked = 0;
    if (const Kernels* k = avx2_kernels()) {
        CHECK(k->isa == Isa::Avx2);
        check_same(ref, *k);
        ++checked;
    }
    if (const Kernels* k = neon_kernels()) {
        CHECK(k->isa == Isa::Neon);
        check_same(ref, *k);
        ++checked;
    }
    MESSAGE("vector variants checked: " << checked << ", active: " << isa_name(active().isa));
    check_same(ref, active());
}

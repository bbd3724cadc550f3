#pragma once

// Word-parallel popcount kernels over vertex bitsets.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, a vector variant (AVX2 on x86-64, NEON on AArch64). The active
// table is picked once at startup from CPUID; FAULTDOM_SIMD=scalar forces the
// reference path. All variants must return identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace faultdom::simd {

using Words = std::span<const std::uint64_t>;

enum class Isa { Scalar, Avx2, Neon };

struct Kernels {
    Isa isa;
    /// popcount(a)
    std::size_t (*popcount)(Words a);
    /// popcount(a & b)
    std::size_t (*popcount_and)(Words a, Words b);
    /// popcount(a & b & c)
    std::size_t (*popcount_and3)(Words a, Words b, Words c);
    /// popcount((a ^ b) & m)
    std::size_t (*popcount_xor_and)(Words a, Words b, Words m);
    /// popcount(a & ~b & m)
    std::size_t (*popcount_andnot_and)(Words a, Words b, Words m);
};

const Kernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Table selected at first use.
const Kernels& active();
std::string_view isa_name(Isa isa);

}  // namespace faultdom::simd

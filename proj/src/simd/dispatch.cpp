#include <cstdlib>
#include <string_view>

#include "faultdom/simd/bitops.hpp"

namespace faultdom::simd {

namespace {

const Kernels& select() {
    if (const char* forced = std::getenv("FAULTDOM_SIMD"); forced && std::string_view(forced) == "scalar")
        return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    if (const Kernels* k = neon_kernels()) return *k;
    return scalar_kernels();
}

}  // namespace

const Kernels& active() {
    static const Kernels& chosen = select();
    return chosen;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

}  // namespace faultdom::simd

#include <chrono>
#include <iostream>

#include "faultdom/reduction.hpp"

int main() {
    faultdom::GadgetSearchStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = faultdom::search_gadgets(&stats);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "F candidates " << stats.f_candidates << ", H candidates " << stats.h_candidates << ", pairs checked "
              << stats.pairs_checked << ", " << secs << " s\n";
    if (!spec) {
        std::cerr << "no gadget pair passed\n";
        return 1;
    }
    std::cout << faultdom::format_gadget_spec(*spec);
    return 0;
}

#include <iostream>
#include <string>

#include "faultdom/corpus.hpp"
#include "faultdom/error.hpp"

using namespace faultdom;

namespace {

constexpr std::size_t kLargeOrders[] = {46, 64, 100};

}  // namespace

int main(int argc, char** argv) {
    const std::string kind = argc > 1 ? argv[1] : "";
    std::vector<Graph> out;
    if (kind == "small") {
        std::cout << "# connected graphs, min degree >= 2, twin-free, 1 <= n <= 8\n";
        for (std::size_t n = 1; n <= 8; ++n)
            for (auto& g : all_graphs(n))
                if (errld_candidate(g)) out.push_back(std::move(g));
    } else if (kind == "cubic") {
        std::cout << "# connected cubic graphs, 4 <= n <= 12 (twins not filtered)\n";
        for (std::size_t n = 4; n <= 12; n += 2)
            for (auto& g : connected_cubic_graphs(n)) out.push_back(std::move(g));
    } else if (kind == "large") {
        std::cout << "# random connected twin-free cubic graphs, first twin-free draw over seeds n, n + 1000, ...\n";
        for (std::size_t n : kLargeOrders) {
            for (std::uint64_t seed = n;; seed += 1000) {
                auto g = random_cubic_graph(n, seed);
                if (!errld_candidate(g)) continue;
                out.push_back(std::move(g));
                break;
            }
        }
    } else {
        std::cerr << "usage: corpus_gen small|cubic|large\n";
        return 2;
    }
    std::cout << format_graph6_lines(out);
    return 0;
}

#include "faultdom/reduction.hpp"

namespace faultdom {

// Output of search_gadgets, version 1 (also in data/gadgets/v1.txt).
const GadgetSpec& frozen_gadgets() {
    static const GadgetSpec spec{
        1,
        {{0, 2}, {1, 3}, {2, 4}, {3, 4}, {5, 7}, {5, 8}, {6, 9}, {6, 10},
         {0, 7}, {0, 9}, {1, 7}, {1, 9}, {2, 7}, {3, 7}, {8, 10}},
        {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}},
    };
    return spec;
}

}  // namespace faultdom

#pragma once

#include <stdexcept>
#include <string>

namespace faultdom {

/// Malformed or out-of-contract input (bad file, bad parameter, range error).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested detector-set variant cannot exist on the given graph.
class NoSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace faultdom

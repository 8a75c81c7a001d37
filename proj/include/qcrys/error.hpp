#pragma once

#include <stdexcept>
#include <string>

namespace qcrys {

// Malformed or out-of-domain input (CLI exit code 2).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exploration or iteration bound exceeded (CLI exit code 3).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug rather than bad input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qcrys

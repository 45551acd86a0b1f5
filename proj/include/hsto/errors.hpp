#pragma once

#include <stdexcept>
#include <string>

namespace hsto {

// Bad input: malformed class, mismatched generators, wrong weight.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A (group, k) pair with no closed form available.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Group hypothesis of a certificate target not met.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hsto

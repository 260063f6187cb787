#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Ring or grid mismatch, bad index, malformed input.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource ceiling (ambient dimension, pivot count, degree) was hit.
class CeilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural precondition of a verification run failed (e.g. a candidate
// generator does not annihilate the form it is supposed to annihilate).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace apolar

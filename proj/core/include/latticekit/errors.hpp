#pragma once

#include <stdexcept>
#include <string>

namespace latk {

// Base class for all errors raised by this library. Mathematical "false" or
// "absent" outcomes are returned as values; exceptions mean the input was
// malformed or outside an operation's contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotContained : Error {
    using Error::Error;
};

struct NotSaturated : Error {
    using Error::Error;
};

struct NotIsotropic : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct NotAPolarization : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct BadParameters : Error {
    using Error::Error;
};

struct HypothesisFailed : Error {
    using Error::Error;
};

struct NotACycle : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace latk

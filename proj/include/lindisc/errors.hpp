#pragma once

#include <stdexcept>
#include <string>

namespace lindisc {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible dimensions (matrix/vector products, block views).
struct DimensionError : Error {
    using Error::Error;
};

// Malformed input text; `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    int line;
    ParseError(int line, const std::string &what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
};

// Instance too large for an exhaustive or branch-and-bound routine.
struct CapacityError : Error {
    using Error::Error;
};

// Argument outside its mathematical domain (e.g. point not in the unit cube).
struct DomainError : Error {
    using Error::Error;
};

// A documented precondition does not hold for the given inputs.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace lindisc

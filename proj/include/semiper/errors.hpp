#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiper {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An element was used with a semiring whose carrier does not contain it.
struct CarrierMismatchError : Error {
    using Error::Error;
};

/// Matrix shapes or semirings disagree, or an operation needs a square matrix.
struct ShapeError : Error {
    using Error::Error;
};

/// An index or index tuple is out of range or malformed.
struct IndexError : Error {
    using Error::Error;
};

/// A size cap was exceeded. The refusal names the cap so callers can raise it.
struct CapExceededError : Error {
    CapExceededError(const std::string& what, std::size_t n, std::size_t cap)
        : Error(what), n(n), cap(cap) {}
    std::size_t n;
    std::size_t cap;
};

/// A documented precondition does not hold for the given arguments.
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed textual input (element string, matrix document, semiring name).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace semiper

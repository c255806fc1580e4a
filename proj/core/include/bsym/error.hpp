#pragma once

#include <stdexcept>
#include <string>

namespace bsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad parameters, wrong dimension, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (matrix, code or spec files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Exhaustive work would exceed the configured enumeration cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace bsym

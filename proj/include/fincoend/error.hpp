#pragma once

#include <stdexcept>
#include <string>

namespace fincoend {

// Base class for every failure raised by the library. The CLI maps the
// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document (unknown field, dangling reference, bad JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally readable input that violates a categorical law.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An enumeration would visit more candidates than the configured cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A truncated computation did not stabilize, or a dimension bound was hit.
class TruncationError : public Error {
public:
    using Error::Error;
};

// A bifunctor or weight was supplied with the wrong variance convention.
class ConventionMismatch : public Error {
public:
    using Error::Error;
};

// Function tables that cannot be compared (different domain or codomain).
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace fincoend

#pragma once

#include <stdexcept>
#include <string>

namespace gq {

// Base of every error thrown by the library. The CLI maps ResourceLimitError
// to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition on a mathematical argument does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

// Element out of range, non-square table, and similar shape problems.
class MalformedError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A braid closure has more than one component.
class LinkNotKnotError : public ParseError {
public:
    LinkNotKnotError(int components)
        : ParseError("braid closure is a link with " + std::to_string(components) +
                     " components, not a knot"),
          components_(components) {}

    int components() const { return components_; }

private:
    int components_;
};

// A configured brute-force bound would be exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Stored data disagrees with a recomputed value.
class DataIntegrityError : public Error {
public:
    using Error::Error;
};

} // namespace gq

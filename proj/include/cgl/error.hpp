#pragma once

#include <stdexcept>
#include <string>

namespace cgl {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sizes of degrees, forms or matrices disagree.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Operation called with inputs violating a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Factor or weight not covered by the implemented theory.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Requested computation exceeds a configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cgl

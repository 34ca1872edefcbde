#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data: non-primitive rays, malformed cones, parse failures.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A documented precondition does not hold (typically: fan not complete).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// A polytope expected to be bounded is not; usually a symptom of an
// incomplete fan further up the call chain.
class UnboundedError : public PreconditionError {
public:
    explicit UnboundedError(const std::string& msg) : PreconditionError(msg) {}
};

// Invariants the theory guarantees were violated at runtime.  Never
// expected to fire on valid inputs; treated as fatal.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace toric

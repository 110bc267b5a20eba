#pragma once

#include <stdexcept>
#include <string>

namespace catdias {

// Base for every error raised by the library. Violations of mathematical
// identities are never errors; they are reported as data.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter outside its legal range (slot index, arity, length, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// A point or axis index outside the shape it refers to.
class BoundsError : public Error {
public:
    using Error::Error;
};

// A support lacks the closure property an operation requires.
class ClosureError : public Error {
public:
    ClosureError(const std::string& what, int side) : Error(what), side_(side) {}
    // 1 or 2 for the two operands of a contraction, 0 otherwise.
    int side() const noexcept { return side_; }

private:
    int side_;
};

// A support is not the support of a standard module.
class StandardnessError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace catdias

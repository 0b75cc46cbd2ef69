#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyomega {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string &what) : Error(what), line_(0) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A consistency check inside an algorithm failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace polyomega

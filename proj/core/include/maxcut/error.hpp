#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxcut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad index, wrong length, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Exact-integer arithmetic left the int64 range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed instance text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    explicit ParseError(const std::string &what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnsupportedFormat : public ParseError {
public:
    using ParseError::ParseError;
};

/// Exhaustive search was requested on an instance above the configured limit.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A stabilizer forest that contains a cycle.
class CorruptForest : public Error {
public:
    using Error::Error;
};

} // namespace maxcut

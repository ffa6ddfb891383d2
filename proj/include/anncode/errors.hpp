#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anncode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (graph, matrix or code files).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called with arguments violating its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Explicit materialization would exceed the configured size limit.
class ScaleCapError : public Error {
public:
    ScaleCapError(const std::string& what, int required, int limit)
        : Error(what + ": requires " + std::to_string(required) + ", limit is " +
                std::to_string(limit)),
          required_(required),
          limit_(limit) {}

    int required() const noexcept { return required_; }
    int limit() const noexcept { return limit_; }

private:
    int required_;
    int limit_;
};

}  // namespace anncode

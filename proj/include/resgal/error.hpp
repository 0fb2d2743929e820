#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resgal {

// Base of every error the engine raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed value: unsorted breakpoints, empty band, bad literal.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// Two operands live on different domains, or a point lies outside one.
class DomainError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the configured bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

// The (family, universe) combination has no implemented reduction.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace resgal

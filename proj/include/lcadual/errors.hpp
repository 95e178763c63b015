#pragma once

#include <stdexcept>
#include <string>

namespace lcadual {

/// Caller misuse: mismatched descriptors, dimension errors, invalid arguments.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured cap (ball size, finite-verification size) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation is not defined for the given domain (e.g. enumerating an infinite group).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in a document, entry expression or table file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, unsigned line, unsigned column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    unsigned line() const { return line_; }
    unsigned column() const { return column_; }

private:
    unsigned line_;
    unsigned column_;
};

}  // namespace lcadual

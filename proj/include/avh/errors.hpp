#pragma once

#include <stdexcept>
#include <string>

namespace avh {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in algebras over a different number of variables.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A configurable work limit was exceeded (straightening steps, stored
/// coordinates, ...). The message names the limit that fired.
class WorkLimitError : public Error {
public:
    explicit WorkLimitError(const std::string& what) : Error(what) {}
};

/// Malformed text input (polynomial/operator syntax, JSON module specs).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

inline void require_same_n(int a, int b, const char* where) {
    if (a != b)
        throw DimensionError(std::string(where) + ": operands have " +
                             std::to_string(a) + " and " + std::to_string(b) +
                             " variables");
}

} // namespace avh

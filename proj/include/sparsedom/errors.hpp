#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsedom {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A precondition on an argument was violated (empty source set, r = 0, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input is well-formed but does not satisfy a structural requirement,
/// e.g. a vertex unreachable from every landmark.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact oracle refused to run because the instance exceeds its size limit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sparsedom

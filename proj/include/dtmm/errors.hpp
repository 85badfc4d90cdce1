#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtmm {

// Syntax problem in an expression string. `offset` is the byte position of
// the offending token within the original input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Evaluation left the mathematical domain: log of a non-positive value,
// sqrt of a negative value, division by zero, or a non-finite result.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance within the
// recursion depth limit.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical consistency check failed at runtime (e.g. a monodromy matrix
// whose determinant is too far from 1, or a reference integration that does
// not converge).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Problem description (JSON config or command-line combination) is invalid.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dtmm

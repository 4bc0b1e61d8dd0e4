#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Operands live on tori of different dimension, or an index has the wrong length.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition of an operation does not hold (zero symbol, wrong degree, q out of range, ...).
class ContractViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A recipe expression breaks the separate-variables / vanishing-at-origin rules.
class RecipeViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or unreadable text input. Carries the 1-based line number (0: no line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace hankel

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellfib {

// Bad input from the user or the config file: reported with exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Domain violations in polynomial arithmetic (mismatched variable lists,
// valuation of the zero polynomial, exponent overflow, ...).
class PolyError : public ValidationError {
public:
    explicit PolyError(const std::string& what) : ValidationError(what) {}
};

// Syntax or unknown-variable error in the textual polynomial grammar.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ValidationError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A broken internal invariant: exit code 2, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ellfib

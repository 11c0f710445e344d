#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlab {

// Raised when textual input (CSV cell, rational literal, JSON field) cannot
// be decoded. Carries a 1-based line/column when the source is a file.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(std::move(message)), line(line), column(column) {}

    std::size_t line;
    std::size_t column;
};

// Raised when a structurally well-formed input violates a documented
// precondition (duplicate labels, bound violations, bad thresholds,
// out-of-range indices, ...).
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(std::string message)
        : std::runtime_error(std::move(message)) {}
};

}  // namespace dlab

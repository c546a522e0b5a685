#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace girthcut {

// Argument outside the mathematical domain of an operation (d < 3, k < 1,
// length mismatch, vertex out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation called on an object it does not apply to.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed edge-list input. Carries the 1-based line number.
class IngestionError : public std::runtime_error {
public:
    IngestionError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A graph fails a structural precondition (regularity, girth, degree).
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown built-in graph name.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Random graph generation ran out of attempts.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace girthcut

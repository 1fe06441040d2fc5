#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared across the library.
 */

#include <stdexcept>
#include <string>

namespace qsl2 {

struct FieldMismatch : std::invalid_argument {
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

struct DegenerateForm : std::domain_error {
    explicit DegenerateForm(const std::string& what) : std::domain_error(what) {}
};

struct AsymmetricDims : std::invalid_argument {
    explicit AsymmetricDims(const std::string& what) : std::invalid_argument(what) {}
};

struct NotADET : std::invalid_argument {
    NotADET() : std::invalid_argument("graph type has no Coxeter number") {}
};

struct BoundaryMismatch : std::invalid_argument {
    explicit BoundaryMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a quantum integer [k]_q vanishes where an inverse is required.
struct QuantumIntegerZero : std::domain_error {
    int k;
    explicit QuantumIntegerZero(int k_)
        : std::domain_error("quantum integer [" + std::to_string(k_) + "] vanishes"), k(k_) {}
};

struct ZeroScale : std::invalid_argument {
    ZeroScale() : std::invalid_argument("rescaling coefficients must be nonzero") {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos) {}
};

}  // namespace qsl2

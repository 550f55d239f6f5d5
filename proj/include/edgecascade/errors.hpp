#ifndef EDGECASCADE_ERRORS_HPP
#define EDGECASCADE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgecascade {

// Base class for every typed error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct VariableMismatchError : Error {
    explicit VariableMismatchError(const std::string& msg) : Error(msg) {}
};

struct ParamMismatchError : Error {
    explicit ParamMismatchError(const std::string& msg) : Error(msg) {}
};

// Raised when a polynomial exceeds the per-parameter degree guard.
struct DegreeLimitError : Error {
    explicit DegreeLimitError(const std::string& msg) : Error(msg) {}
};

struct EulerCompatError : Error {
    explicit EulerCompatError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedCaseError : Error {
    explicit UnsupportedCaseError(const std::string& msg) : Error(msg) {}
};

struct CatalogIntegrityError : Error {
    explicit CatalogIntegrityError(const std::string& msg) : Error(msg) {}
};

// Linear system has no solution; `row` is a certificate row index.
struct InconsistentSystemError : Error {
    int row;
    InconsistentSystemError(const std::string& msg, int row_) : Error(msg), row(row_) {}
};

// Numeric evaluation could not reach the requested accuracy.
struct PrecisionError : Error {
    double achieved_log10_error;
    PrecisionError(const std::string& msg, double achieved)
        : Error(msg), achieved_log10_error(achieved) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

} // namespace edgecascade

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace primanal {

// Gauss-Jordan hit a rank-deficient matrix where an inverse was required.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive sweep would exceed the configured enumeration budget.
struct EnumerationTooLargeError : std::runtime_error {
    explicit EnumerationTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// Key-recovery oracle pairs admit no single consistent key.
struct InconsistentOracleError : std::runtime_error {
    explicit InconsistentOracleError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed cipher-spec document (JSON text or preset string).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace primanal

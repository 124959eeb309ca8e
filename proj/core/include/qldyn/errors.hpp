#pragma once

#include <stdexcept>
#include <string>

namespace qldyn {

// Invalid inputs: out-of-domain parameters, malformed games, boundary policies.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Solver did not meet its contract; carries the last residual for diagnostics.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

}  // namespace qldyn

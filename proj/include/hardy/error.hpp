#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Argument outside the open interval where a quantity is defined.
class DomainRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input that makes a quotient undefined (zero weighted mass, empty support).
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative method failed to converge or produced non-finite values.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, double last_residual = 0.0)
        : std::runtime_error(what), residual_(last_residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A geometric construction (mesh, test-function support) is not realisable.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition (negative input to a rearrangement, grid mismatch).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hardy

#pragma once

#include <stdexcept>
#include <string>

namespace anforge {

/// Precondition violated (zero polynomial, non-monic input, n out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// ode_solve_xdx was handed a right-hand side with a nonzero x^1 coefficient.
class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// scale_clear produced a non-integral coefficient.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The prime divides the leading coefficient or the discriminant.
class BadPrime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial with vanishing discriminant where a squarefree one is required.
class Degenerate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An arithmetic law that must hold unconditionally was observed to fail.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A requested run is larger than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::string estimate)
        : std::runtime_error(what), estimate_(std::move(estimate))
    {
    }
    [[nodiscard]] const std::string& estimate() const { return estimate_; }

private:
    std::string estimate_;
};

/// Too few usable points for a growth fit.
class NoFit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace anforge

#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

/// Evaluation outside the domain of a nonlinearity function (n = 0, or past the end of a table).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters that violate a documented invariant (kappa < 1/2, GP with |alpha| >= 1, ...).
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series or eigen-solve that failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantity that must be real came out with a non-negligible imaginary part.
/// This indicates a bug, not a physical regime.
class RealityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class UnknownPreset : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cascade

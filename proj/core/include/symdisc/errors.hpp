#pragma once

#include <stdexcept>
#include <string>

namespace symdisc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root iteration did not reach the requested backward error.
struct NonConvergence : Error {
    double achieved_residual;
    NonConvergence(const std::string& msg, double achieved)
        : Error(msg + " (achieved residual " + std::to_string(achieved) + ")"),
          achieved_residual(achieved) {}
};

/// Input lies outside the domain of the requested splitting.
struct NotInDomain : Error {
    using Error::Error;
};

/// kernel_general called on a tuple inside the confluence band.
struct ConfluentInput : Error {
    using Error::Error;
};

/// The confluent perturbation scheme produced inconsistent scales.
struct ExtrapolationUnstable : Error {
    double disagreement;
    ExtrapolationUnstable(const std::string& msg, double d)
        : Error(msg + " (relative disagreement " + std::to_string(d) + ")"), disagreement(d) {}
};

/// Schur iteration failed to converge.
struct DecompositionFailure : Error {
    using Error::Error;
};

/// Blaschke factor evaluated at the reflected pole 1/conj(zero).
struct PoleHit : Error {
    using Error::Error;
};

}  // namespace symdisc

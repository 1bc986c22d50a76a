#pragma once

#include <vector>

#include "symdisc/types.hpp"

namespace symdisc {

/// Result of a simultaneous root solve of a monic polynomial.
struct RootSolve {
    std::vector<Complex> roots;
    /// Per-root inclusion radius estimate n*|p(x)|/|p'(x)|; for an m-fold
    /// cluster this inflates to the cluster's true uncertainty.
    std::vector<double> radius;
    double backward_error = 0.0;
    int iterations = 0;
};

/// Roots of t^n + coeffs[0] t^(n-1) + ... + coeffs[n-1] by Aberth-Ehrlich
/// simultaneous iteration with a Newton polish pass. Initial guesses sit on
/// the Cauchy-bound circle rotated by a fixed irrational angle. Throws
/// NonConvergence if the backward error does not reach tol within the
/// iteration budget.
RootSolve solve_monic(const std::vector<Complex>& coeffs, double tol = 1e-12);

}  // namespace symdisc

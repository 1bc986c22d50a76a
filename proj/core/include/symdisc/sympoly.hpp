#pragma once

#include "symdisc/roots.hpp"
#include "symdisc/types.hpp"

namespace symdisc::sympoly {

/// Elementary symmetric functions of the tuple, computed by multiplying out
/// prod (t - lambda_j) one factor at a time.
SymPoint symmetrize(const RootTuple& lambda);

/// Sign bridge z_k = (-1)^k a_k between symmetrized coordinates and the monic
/// polynomial whose roots are the fiber. Exact, no arithmetic error.
MonicPoly from_sympoint(const SymPoint& z);
SymPoint to_sympoint(const MonicPoly& p);

/// Fiber of the symmetrization map over z: the roots (with multiplicity) of
/// t^n - z_1 t^(n-1) + ... + (-1)^n z_n.
RootTuple roots_of(const SymPoint& z, double tol = 1e-12);

/// Root solve with per-root inclusion radii, for callers that need error
/// estimates along with the fiber.
RootSolve solve_fiber(const SymPoint& z, double tol = 1e-12);

enum class StabilityVerdict { Inside, Boundary, Outside };

/// Schur-Cohn recursion applied to p scaled so that "all roots of modulus
/// < 1 - margin" becomes "Schur stable". Boundary is returned whenever a
/// pivot ratio sits within the degeneracy tolerance of the unit circle,
/// instead of guessing a side.
StabilityVerdict schur_stable(const MonicPoly& p, double margin = 0.0);

/// Coefficient convolution; realizes the glueing map p_{k,n} through
/// from_sympoint / to_sympoint.
MonicPoly poly_multiply(const MonicPoly& p, const MonicPoly& q);

/// p_{k,n}(w, z): the symmetrized point whose fiber is the union of the
/// fibers of w and z.
SymPoint p_kn(const SymPoint& w, const SymPoint& z);

/// Distance between unordered tuples: optimal assignment on |a_i - b_j|,
/// reported as the largest matched pair distance.
double multiset_distance(const RootTuple& a, const RootTuple& b);
double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace symdisc::sympoly

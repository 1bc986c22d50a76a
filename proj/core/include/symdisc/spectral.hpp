#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "symdisc/geometry.hpp"
#include "symdisc/maps.hpp"
#include "symdisc/types.hpp"

namespace symdisc::spectral {

using Matrix = Eigen::MatrixXcd;

/// Symmetrized spectrum of W without an eigendecomposition: the signed
/// characteristic polynomial coefficients from the Faddeev-LeVerrier
/// recursion. Keeps the projection independent of the eigenvalue solver it
/// is cross-checked against.
SymPoint psi(const Matrix& W);

/// max |eigenvalue|.
double spectral_radius(const Matrix& W);

std::vector<Complex> eigenvalues(const Matrix& W);

/// Spectral-ball membership through the symmetrized coordinates: classifies
/// psi(W), exercising the identity "W in the ball iff psi(W) in the domain".
geometry::MembershipVerdict in_spectral_ball(const Matrix& W, double margin = 1e-9);

/// Constant-spectrum family connecting diag(spectrum) to W. Built from the
/// unitary Schur form W = Q S Q*: Y = log Q, the strictly upper entries of
/// S are switched on linearly, and path(t) = exp(tY) S(t) exp(-tY). With
/// this construction path(0) = diag and path(1) = W.
struct SpectrumPath {
    Matrix Y;  // log of the Schur basis
    Matrix S;  // upper triangular, diagonal = spectrum
};

SpectrumPath constant_spectrum_path(const Matrix& W);
Matrix path_eval(const SpectrumPath& p, Complex t);

/// Matrix map F(W) = conj * (sum coeffs[k] W^k) * conj^-1; the optional
/// similarity covers conjugation-composed test maps without losing the
/// scalar symbol that the spectral mapping theorem provides.
struct MatrixPolynomial {
    std::vector<Complex> coeffs;
    std::optional<Matrix> conjugation;

    Complex scalar(Complex lambda) const;
};

Matrix apply(const MatrixPolynomial& f, const Matrix& W);

/// Random element of the spectral ball: separated eigenvalues pushed through
/// a similarity of bounded condition number.
Matrix sample_spectral_ball(int n, std::uint64_t seed, std::uint64_t index,
                            double radius = 0.95);

/// Unstructured random matrix with entries scaled so the spectral radius
/// spreads across the unit circle; used by the verdict-equivalence scans.
Matrix random_matrix(int n, std::uint64_t seed, std::uint64_t index);

struct DescentReport {
    int samples = 0;
    double max_residual = 0.0;   // |psi(F(W)) - psi(F(diag(spec W)))|, scaled
    double p50 = 0.0, p90 = 0.0, p99 = 0.0;
    int range_violations = 0;    // samples where F(W) left the spectral ball
    int worst_index = 0;         // sample index attaining max_residual
    bool pass = false;           // max residual within tolerance
};

/// Verifies the descent identity psi(F(W)) = psi(F(diag(spectrum W))) on
/// random ball samples; matrix polynomials satisfy it by the spectral
/// mapping theorem, which makes the diagonal route an independent oracle.
DescentReport descent_check(const MatrixPolynomial& f, int n, int samples, std::uint64_t seed,
                            double tol = 1e-7);

struct SpectrumActionReport {
    int samples = 0;
    double max_mismatch = 0.0;  // worst assignment distance sigma(F(W)) vs B(sigma(W))
    int worst_index = 0;        // sample index attaining max_mismatch
    bool pass = false;
};

/// Tests whether a single scalar function maps sigma(W) onto sigma(F(W))
/// entrywise (optimal assignment). When expected is absent the scalar
/// symbol of F itself is fitted against the samples.
SpectrumActionReport spectrum_action_check(const MatrixPolynomial& f,
                                           const std::optional<maps::BlaschkeProduct>& expected,
                                           int n, int samples, std::uint64_t seed,
                                           double tol = 1e-7);

}  // namespace symdisc::spectral

#pragma once

#include <cstdint>
#include <vector>

#include "symdisc/maps.hpp"
#include "symdisc/types.hpp"

namespace symdisc::bergman {

enum class KernelPath { Generic, Confluent, ClosedForm2 };

const char* kernel_path_name(KernelPath p);

struct KernelValue {
    Complex value{0.0, 0.0};
    /// First-order relative error estimate of the evaluation path (pivot
    /// growth and Vandermonde conditioning for the generic route,
    /// extrapolation residual for the confluent route).
    double condition_estimate = 0.0;
    KernelPath path = KernelPath::Generic;
};

/// det pi_n'(lambda) = prod_{j<k} (lambda_j - lambda_k); 1 for n = 1.
Complex jacobian_det(const RootTuple& lambda);

double min_pair_separation(const RootTuple& t);

/// Tuples closer to the critical set than this are routed to the confluent
/// evaluator; below it the Vandermonde denominator has lost ~8 digits.
double confluence_threshold(const RootTuple& t);

/// Proximity of a tuple to the critical set of repeated coordinates.
struct CriticalSetQuery {
    double min_pair_separation = 0.0;
    bool confluent = false;  // separation below the confluence threshold
};

CriticalSetQuery critical_set_query(const RootTuple& t);
bool is_confluent(const RootTuple& t);

/// Kernel of the symmetrized polydisc in fiber coordinates:
/// det[(1 - lambda_j conj(mu_k))^-2] / (pi^n det pi_n'(lambda)
/// conj(det pi_n'(mu))), determinant by partially pivoted LU. Throws
/// ConfluentInput when either tuple violates the separation threshold.
KernelValue kernel_general(const RootTuple& lambda, const RootTuple& mu);

/// n = 2 closed form in symmetrized coordinates: numerator
/// 2 - conj(w1) z1 + 2 z2 conj(w2), denominator pi^2 prod(1 - l_i conj(m_j))^2
/// with the product taken over the fibers. Smooth across the critical set.
KernelValue kernel_closed2(const SymPoint& z, const SymPoint& w);
KernelValue kernel_closed2_roots(const RootTuple& lambda, const RootTuple& mu);

/// Cluster structure of a tuple relative to the confluence threshold.
struct ClusterInfo {
    std::vector<std::vector<int>> groups;  // indices, clusters of size >= 2 only
    int vanishing_order = 0;               // sum m(m-1)/2 over clusters
};

ClusterInfo cluster_roots(const RootTuple& t);

/// Replaces every cluster by its centroid spread over the scaled m-th roots
/// of unity: the cluster's factor becomes (t - c)^m - eps^m, so the
/// symmetrized point moves along a fixed direction with magnitude eps^m.
RootTuple spread_clusters(const RootTuple& t, const ClusterInfo& info, double eps);

/// Drives kernel_general to its analytic limit at a confluent pair by
/// polynomial extrapolation in eps^power over the given scales. Reports the
/// relative disagreement of the two deepest extrapolants in *disagreement.
Complex extrapolated_kernel(const RootTuple& lambda, const RootTuple& mu,
                            const std::vector<double>& scales, int power,
                            double* disagreement);

/// Analytic extension of the kernel across the critical set: epsilon
/// perturbation of coincident roots with Richardson extrapolation over a
/// geometric scale ladder (n = 2 delegates to the closed form). Throws
/// ExtrapolationUnstable when the deepest extrapolants disagree by more
/// than 1e-6 relative.
KernelValue kernel_confluent(const RootTuple& lambda, const RootTuple& mu);

/// Relative residual of the Bergman transformation rule under the lifted
/// disc automorphism h:
/// |K(f(z), f(w)) J(z) conj(J(w)) - K(z, w)| / |K(z, w)|, with
/// J(pi(lambda)) = prod h'(lambda_j) jacobian_det(h(lambda)) / jacobian_det(lambda).
double transformation_check(const maps::MoebiusMap& h, const RootTuple& lambda,
                            const RootTuple& mu);

struct LuQiKengReport {
    long count = 0;
    double min_abs = 0.0;
    SymPoint argmin_z, argmin_w;
    long failures = 0;  // zero or non-finite kernel values
    bool pass = false;
};

/// Zero-free scan of the n = 2 kernel over random interior pairs; every
/// other pair runs on the w2 = 0 slice the zero-freeness proof reduces to.
LuQiKengReport luqikeng_scan(long count, std::uint64_t seed, int threads = 1);

}  // namespace symdisc::bergman

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each check pins its tolerance and sample budget in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symdisc/bergman.hpp"
#include "symdisc/geometry.hpp"
#include "symdisc/maps.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/spectral.hpp"
#include "symdisc/sympoly.hpp"

using namespace symdisc;
namespace sp = symdisc::sympoly;
namespace geo = symdisc::geometry;
namespace bg = symdisc::bergman;
namespace mp = symdisc::maps;
namespace spec = symdisc::spectral;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// 1. closed-form kernel value at the origin, from both evaluation routes
Outcome c1_kernel_value() {
    const double expect = 2.0 / (kPi * kPi);
    SymPoint zero({Complex(0.0, 0.0), Complex(0.0, 0.0)});
    double closed_err = std::abs(bg::kernel_closed2(zero, zero).value - expect) / expect;

    // Confluent limit of the determinant formula. The double zeros are
    // spread to (+eps, -eps) on both sides; swapping eps -> -eps permutes
    // the tuple, and the symmetrized points (0, -eps^2) are even in eps^2,
    // so the kernel is a series in eps^4 and the ladder extrapolates in
    // that variable.
    RootTuple dz({Complex(0.0, 0.0), Complex(0.0, 0.0)});
    std::vector<double> ladder;
    for (int k = 0; k < 5; ++k) ladder.push_back(0.3 * std::pow(std::sqrt(0.5), k));
    double disagreement = 0.0;
    Complex lim4 = bg::extrapolated_kernel(dz, dz, ladder, 4, &disagreement);
    double limit_err = std::abs(lim4 - expect) / expect;
    // scheme independence: the plain eps^2 ladder lands on the same value
    Complex lim2 = bg::extrapolated_kernel(dz, dz, ladder, 2, nullptr);
    double cross = std::abs(lim2 - lim4) / expect;

    Outcome o;
    o.ok = closed_err <= 1e-12 && limit_err <= 1e-12 && cross <= 1e-7;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "closed-form err %.2e, confluent-limit err %.2e (tol 1e-12)", closed_err,
                  limit_err);
    o.detail = buf;
    return o;
}

// 2. determinant formula vs n = 2 closed form on random generic pairs
Outcome c2_formula_crosscheck() {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        std::mt19937_64 rng = make_stream(1002, i);
        RootTuple lam = oracles::separated_tuple(rng, 2, 0.05, 0.95);
        RootTuple mu = oracles::separated_tuple(rng, 2, 0.05, 0.95);
        Complex a = bg::kernel_general(lam, mu).value;
        Complex b = bg::kernel_closed2_roots(lam, mu).value;
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    Outcome o;
    o.ok = worst <= 1e-10;
    char buf[96];
    std::snprintf(buf, sizeof buf, "10^4 pairs, worst relative gap %.2e (tol 1e-10)", worst);
    o.detail = buf;
    return o;
}

// 3. product formula for det pi_n' vs finite differences of symmetrize
Outcome c3_jacobian_identity() {
    auto symmetrize_vec = [](const std::vector<Complex>& x) {
        return sp::symmetrize(RootTuple(x)).coords;
    };
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
        for (int i = 0; i < 1000; ++i) {
            std::mt19937_64 rng = make_stream(1003, n * 10000 + i);
            RootTuple t = oracles::separated_tuple(rng, n, 0.05, 0.95);
            Complex jd = bg::jacobian_det(t);
            Complex fd = oracles::fd_jacobian_det(symmetrize_vec, t.entries);
            worst = std::max(worst, std::abs(jd - fd) / std::abs(jd));
        }
    }
    Outcome o;
    o.ok = worst <= 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, "n = 2..6, 10^3 points each, worst relative gap %.2e (tol 1e-6)",
                  worst);
    o.detail = buf;
    return o;
}

// 4. zero-free scan of the n = 2 kernel, including the w2 = 0 slice
Outcome c4_luqikeng() {
    bg::LuQiKengReport r = bg::luqikeng_scan(100000, 1004);
    Outcome o;
    o.ok = r.pass && r.min_abs > 0.0 && r.failures == 0;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "10^5 pairs, min |K| = %.6e at z = (%.4f%+.4fi, %.4f%+.4fi), failures %ld",
                  r.min_abs, r.argmin_z.coords[0].real(), r.argmin_z.coords[0].imag(),
                  r.argmin_z.coords[1].real(), r.argmin_z.coords[1].imag(), r.failures);
    o.detail = buf;
    return o;
}

// 5. roots_of . symmetrize multiset identity
Outcome c5_roundtrip() {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        std::mt19937_64 rng = make_stream(1005, i);
        int n = 1 + i % 8;
        RootTuple t;
        while (int(t.n()) < n) {
            Complex c = 2.0 * disc_point(rng);
            bool ok = true;
            for (const Complex& l : t.entries) ok = ok && std::abs(l - c) >= 1e-3;
            if (ok) t.entries.push_back(c);
        }
        RootTuple back = sp::roots_of(sp::symmetrize(t));
        worst = std::max(worst, sp::multiset_distance(back, t));
    }
    Outcome o;
    o.ok = worst <= 1e-8;
    char buf[96];
    std::snprintf(buf, sizeof buf, "10^4 separated tuples, n <= 8, worst multiset distance %.2e (tol 1e-8)",
                  worst);
    o.detail = buf;
    return o;
}

// 6. Schur-Cohn vs root moduli; Faddeev-LeVerrier vs eigenvalues; ball vs radius
Outcome c6_oracle_equivalence() {
    long mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        std::mt19937_64 rng = make_stream(1006, i);
        int n = 1 + i % 6;
        RootTuple t;
        double maxmod = 0.0;
        for (int j = 0; j < n; ++j) {
            Complex c = 1.4 * disc_point(rng);
            maxmod = std::max(maxmod, std::abs(c));
            t.entries.push_back(c);
        }
        if (std::abs(maxmod - 1.0) <= 1e-6) continue;
        bool by_schur = sp::schur_stable(sp::from_sympoint(sp::symmetrize(t))) ==
                        sp::StabilityVerdict::Inside;
        if (by_schur != (maxmod < 1.0)) ++mismatches;
    }

    double psi_worst = 0.0;
    long ball_mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        int n = 1 + i % 6;
        spec::Matrix w = spec::random_matrix(n, 1006, std::uint64_t(i));
        SymPoint a = spec::psi(w);
        SymPoint b = sp::symmetrize(RootTuple(spec::eigenvalues(w)));
        for (int k = 0; k < n; ++k) {
            psi_worst = std::max(psi_worst, std::abs(a.coords[k] - b.coords[k]));
        }
        double r = spec::spectral_radius(w);
        if (std::abs(r - 1.0) <= 1e-6) continue;
        bool inside = spec::in_spectral_ball(w).region == geo::Region::Interior;
        if (inside != (r < 1.0)) ++ball_mismatches;
    }

    Outcome o;
    o.ok = mismatches == 0 && ball_mismatches == 0 && psi_worst <= 1e-8;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "stability mismatches %ld, ball mismatches %ld, psi residual %.2e (tol 1e-8)",
                  mismatches, ball_mismatches, psi_worst);
    o.detail = buf;
    return o;
}

// 7. boundary-distance decay of lifted Blaschke products
Outcome c7_properness_decay() {
    const std::vector<double> grid{1e-1, 1e-2, 1e-3, 1e-4};
    bool all_ok = true;
    double worst_ratio = 0.0;
    for (int b = 0; b < 5; ++b) {
        std::mt19937_64 rng = make_stream(1007, b);
        mp::BlaschkeProduct blaschke;
        int deg = 1 + int(uniform01(rng) * 3.99);
        for (int j = 0; j < deg; ++j) blaschke.zeros.push_back(0.5 * disc_point(rng));
        blaschke.factor = circle_point(rng);
        for (int n = 2; n <= 3; ++n) {
            mp::PropernessReport r =
                mp::properness_scan(blaschke, n, grid, 250, 1007 + std::uint64_t(b));
            all_ok = all_ok && r.pass;
            for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
                worst_ratio = std::max(
                    worst_ratio, r.max_boundary_distance[k + 1] / r.max_boundary_distance[k]);
            }
        }
    }
    Outcome o;
    o.ok = all_ok && worst_ratio <= 0.5;
    char buf[96];
    std::snprintf(buf, sizeof buf, "5 products x n in {2,3}, worst per-decade ratio %.3f (must be <= 0.5)",
                  worst_ratio);
    o.detail = buf;
    return o;
}

// 8. Bergman transformation residual and lifted automorphism round trip
Outcome c8_automorphism_invariance() {
    double worst_residual = 0.0;
    double worst_roundtrip = 0.0;
    for (int i = 0; i < 1000; ++i) {
        std::mt19937_64 rng = make_stream(1008, i);
        int n = 2 + i % 2;
        mp::MoebiusMap h;
        h.alpha = 0.8 * disc_point(rng);
        h.factor = circle_point(rng);
        RootTuple lam = oracles::separated_tuple(rng, n, 0.05, 0.9);
        RootTuple mu = oracles::separated_tuple(rng, n, 0.05, 0.9);
        worst_residual = std::max(worst_residual, bg::transformation_check(h, lam, mu));

        SymPoint z = sp::symmetrize(lam);
        SymPoint back = mp::lift_apply(mp::inverse_automorphism(h, n),
                                       mp::lift_apply(mp::automorphism(h, n), z));
        for (int k = 0; k < n; ++k) {
            worst_roundtrip = std::max(worst_roundtrip, std::abs(back.coords[k] - z.coords[k]));
        }
    }
    Outcome o;
    o.ok = worst_residual <= 1e-8 && worst_roundtrip <= 1e-9;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "10^3 draws, transformation residual %.2e (tol 1e-8), roundtrip %.2e (tol 1e-9)",
                  worst_residual, worst_roundtrip);
    o.detail = buf;
    return o;
}

// 9. constant-spectrum path endpoints and spectrum constancy
Outcome c9_spectrum_path() {
    double worst_end = 0.0, worst_const = 0.0;
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + i % 5;
        spec::Matrix w = spec::sample_spectral_ball(n, 1009, std::uint64_t(i));
        double wn = w.norm();
        spec::SpectrumPath p = spec::constant_spectrum_path(w);
        std::vector<Complex> spectrum = spec::eigenvalues(w);

        spec::Matrix at0 = spec::path_eval(p, Complex(0.0, 0.0));
        std::vector<Complex> diag0(n);
        for (int k = 0; k < n; ++k) diag0[k] = at0(k, k);
        spec::Matrix off = at0;
        for (int k = 0; k < n; ++k) off(k, k) = Complex(0.0, 0.0);
        double end0 = (off.norm() + sp::multiset_distance(diag0, spectrum)) / (1e-30 + wn);
        double end1 = (spec::path_eval(p, Complex(1.0, 0.0)) - w).norm() / (1e-30 + wn);
        worst_end = std::max({worst_end, end0, end1});

        for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            std::vector<Complex> st = spec::eigenvalues(spec::path_eval(p, Complex(t, 0.0)));
            worst_const =
                std::max(worst_const, sp::multiset_distance(st, spectrum) / (1.0 + wn));
        }
    }
    Outcome o;
    o.ok = worst_end <= 1e-8 && worst_const <= 1e-7;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "10^3 matrices, endpoint residual %.2e (tol 1e-8), constancy %.2e (tol 1e-7)",
                  worst_end, worst_const);
    o.detail = buf;
    return o;
}

// 10. descent through the symmetrized domain and the induced spectrum action
Outcome c10_descent_action() {
    spec::MatrixPolynomial f;
    f.coeffs = {Complex(0.0, 0.0), Complex(0.3, 0.0), Complex(0.4, 0.0)};
    spec::DescentReport d = spec::descent_check(f, 3, 1000, 1010);
    spec::SpectrumActionReport a = spec::spectrum_action_check(f, std::nullopt, 3, 1000, 1010);
    Outcome o;
    o.ok = d.pass && a.pass && d.range_violations == 0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "10^3 samples, descent residual %.2e, action mismatch %.2e (tol 1e-7)",
                  d.max_residual, a.max_mismatch);
    o.detail = buf;
    return o;
}

// 11. negative exhaustion inside, strictly increasing along root-radius rays
Outcome c11_hyperconvexity() {
    long negatives = 0, monotone_breaks = 0;
    for (int n = 2; n <= 4; ++n) {
        for (const SymPoint& z : geo::sample(geo::SampleRegion::Interior, n, 1000, 1011)) {
            if (!(geo::exhaustion(z) < 0.0)) ++negatives;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        std::mt19937_64 rng = make_stream(1011, i);
        int n = 2 + i % 3;
        RootTuple t;
        for (int j = 0; j < n; ++j) t.entries.push_back(disc_point(rng));
        double prev = -std::numeric_limits<double>::infinity();
        for (int s = 1; s <= 20; ++s) {
            RootTuple scaled = t;
            for (Complex& l : scaled.entries) l *= double(s) / 20.0;
            double u = geo::exhaustion(sp::symmetrize(scaled));
            if (!(u > prev)) ++monotone_breaks;
            prev = u;
        }
    }
    Outcome o;
    o.ok = negatives == 0 && monotone_breaks == 0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "sign violations %ld, monotonicity breaks %ld", negatives,
                  monotone_breaks);
    o.detail = buf;
    return o;
}

// 12. polynomial max modulus attains on the torus samples
Outcome c12_shilov_max_modulus() {
    bool all_ok = true;
    double worst_gap = 0.0;
    for (int n = 2; n <= 3; ++n) {
        for (int k = 0; k < 20; ++k) {
            geo::MultiPoly f = geo::random_multipoly(n, 3, 1012 + std::uint64_t(k));
            geo::MaxModulusReport r = geo::max_modulus_check(f, n, 10000, 1012 + k);
            all_ok = all_ok && r.pass;
            worst_gap = std::max(worst_gap, r.interior_max - r.shilov_max);
        }
    }
    Outcome o;
    o.ok = all_ok;
    char buf[96];
    std::snprintf(buf, sizeof buf, "20 polynomials each on n = 2 and n = 3, worst interior excess %.2e",
                  worst_gap);
    o.detail = buf;
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);

    const std::vector<Criterion> criteria{
        {1, "kernel closed-form value at the origin", 1.0, c1_kernel_value},
        {2, "determinant formula vs closed form", 10.0, c2_formula_crosscheck},
        {3, "Jacobian product identity", 30.0, c3_jacobian_identity},
        {4, "zero-free kernel scan", 60.0, c4_luqikeng},
        {5, "roots/symmetrize round trip", 30.0, c5_roundtrip},
        {6, "stability and projection oracle equivalence", 60.0, c6_oracle_equivalence},
        {7, "properness boundary decay", 60.0, c7_properness_decay},
        {8, "automorphism invariance", 60.0, c8_automorphism_invariance},
        {9, "constant-spectrum path", 60.0, c9_spectrum_path},
        {10, "descent and spectrum action", 60.0, c10_descent_action},
        {11, "hyperconvex exhaustion", 30.0, c11_hyperconvexity},
        {12, "Shilov max modulus", 60.0, c12_shilov_max_modulus},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && only != c.id) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        bool timed_out = secs > c.budget_seconds;
        bool ok = o.ok && !timed_out;
        if (!ok) ++failures;
        std::printf("[%s] %2d. %s: %s (%.2fs/%.0fs)%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), secs, c.budget_seconds, timed_out ? " TIMEOUT" : "");
        std::fflush(stdout);
    }
    return failures;
}

#include "symdisc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symdisc/errors.hpp"

namespace symdisc {
namespace {

constexpr double kPi = 3.14159265358979323846;
// Irrational rotation of the initial circle; any symmetric starting
// configuration would stall on polynomials with symmetric root sets.
constexpr double kStartRotation = 0.7390851332151607;

struct Eval {
    Complex p;
    Complex dp;
    double scale;  // sum |a_k| |x|^(n-k), the backward-error denominator
};

Eval horner(const std::vector<Complex>& a, Complex x) {
    Complex p(1.0, 0.0);
    Complex dp(0.0, 0.0);
    double ax = std::abs(x);
    double s = 1.0;
    for (const Complex& c : a) {
        dp = dp * x + p;
        p = p * x + c;
        s = s * ax + std::abs(c);
    }
    return {p, dp, s};
}

}  // namespace

RootSolve solve_monic(const std::vector<Complex>& coeffs, double tol) {
    RootSolve out;
    if (!all_finite(coeffs)) {
        throw NonConvergence("non-finite coefficient",
                             std::numeric_limits<double>::quiet_NaN());
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol_eff = std::max(tol, 8.0 * eps);

    // Exact zero roots deflate immediately; this also covers t^n.
    std::vector<Complex> a = coeffs;
    std::size_t zero_roots = 0;
    while (!a.empty() && a.back() == Complex(0.0, 0.0)) {
        a.pop_back();
        ++zero_roots;
    }

    const std::size_t n = a.size();
    if (n == 0) {
        out.roots.assign(zero_roots, Complex(0.0, 0.0));
        out.radius.assign(zero_roots, 0.0);
        return out;
    }
    if (n == 1) {
        out.roots.push_back(-a[0]);
        out.radius.push_back(2.0 * eps * (1.0 + std::abs(a[0])));
    } else {
        double amax = 0.0;
        for (const Complex& c : a) amax = std::max(amax, std::abs(c));
        const double cauchy = 1.0 + amax;

        std::vector<Complex> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            double th = 2.0 * kPi * (double(i) / double(n)) + kStartRotation;
            x[i] = cauchy * Complex(std::cos(th), std::sin(th));
        }

        std::vector<bool> done(n, false);
        const int max_iter = 400;
        int it = 0;
        for (; it < max_iter; ++it) {
            bool all_done = true;
            double max_step = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) continue;
                Eval e = horner(a, x[i]);
                if (std::abs(e.p) <= tol_eff * e.scale) {
                    done[i] = true;
                    continue;
                }
                all_done = false;
                Complex newton;
                if (e.dp == Complex(0.0, 0.0)) {
                    // stationary start point: nudge off it
                    x[i] += Complex(1e-6, 1e-6) * (1.0 + std::abs(x[i]));
                    continue;
                }
                newton = e.p / e.dp;
                Complex sum(0.0, 0.0);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Complex d = x[i] - x[j];
                    if (d == Complex(0.0, 0.0)) d = Complex(1e-14, 1e-14) * (1.0 + std::abs(x[i]));
                    sum += 1.0 / d;
                }
                Complex denom = 1.0 - newton * sum;
                Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
                x[i] -= step;
                max_step = std::max(max_step, std::abs(step));
            }
            if (all_done) break;
            // stagnation with tiny steps counts as converged-as-well-as-possible
            if (it > 50 && max_step < eps * cauchy) break;
        }
        out.iterations = it;

        // Newton polish, kept only when it reduces the residual.
        for (std::size_t i = 0; i < n; ++i) {
            for (int k = 0; k < 2; ++k) {
                Eval e = horner(a, x[i]);
                if (e.dp == Complex(0.0, 0.0)) break;
                Complex y = x[i] - e.p / e.dp;
                Eval e2 = horner(a, y);
                if (std::abs(e2.p) < std::abs(e.p)) x[i] = y; else break;
            }
        }

        double worst = 0.0;
        out.roots = x;
        out.radius.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            Eval e = horner(a, x[i]);
            worst = std::max(worst, std::abs(e.p) / e.scale);
            double r;
            if (e.dp == Complex(0.0, 0.0)) {
                r = std::pow(std::abs(e.p), 1.0 / double(n));
            } else {
                r = double(n) * std::abs(e.p) / std::abs(e.dp);
            }
            out.radius[i] = std::max(r, 4.0 * eps * (1.0 + std::abs(x[i])));
        }
        out.backward_error = worst;
        if (!(worst <= tol_eff)) {  // also catches NaN from non-finite input
            throw NonConvergence("root iteration exhausted its budget", worst);
        }
    }

    out.roots.insert(out.roots.end(), zero_roots, Complex(0.0, 0.0));
    out.radius.insert(out.radius.end(), zero_roots, 0.0);
    return out;
}

}  // namespace symdisc

#include "symdisc/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symdisc/assignment.hpp"
#include "symdisc/errors.hpp"

namespace symdisc {

bool all_finite(const std::vector<Complex>& v) {
    for (const Complex& c : v) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

}  // namespace symdisc

namespace symdisc::sympoly {

SymPoint symmetrize(const RootTuple& lambda) {
    const std::size_t n = lambda.n();
    std::vector<Complex> e(n + 1, Complex(0.0, 0.0));
    e[0] = Complex(1.0, 0.0);
    std::size_t used = 0;
    for (const Complex& l : lambda.entries) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += l * e[k - 1];
    }
    return SymPoint(std::vector<Complex>(e.begin() + 1, e.end()));
}

MonicPoly from_sympoint(const SymPoint& z) {
    std::vector<Complex> a(z.n());
    double sign = -1.0;
    for (std::size_t k = 0; k < z.n(); ++k) {
        a[k] = sign * z.coords[k];
        sign = -sign;
    }
    return MonicPoly(std::move(a));
}

SymPoint to_sympoint(const MonicPoly& p) {
    std::vector<Complex> z(p.degree());
    double sign = -1.0;
    for (std::size_t k = 0; k < p.degree(); ++k) {
        z[k] = sign * p.coeffs[k];
        sign = -sign;
    }
    return SymPoint(std::move(z));
}

RootSolve solve_fiber(const SymPoint& z, double tol) {
    return solve_monic(from_sympoint(z).coeffs, tol);
}

RootTuple roots_of(const SymPoint& z, double tol) {
    return RootTuple(solve_fiber(z, tol).roots);
}

StabilityVerdict schur_stable(const MonicPoly& p, double margin) {
    if (margin < 0.0) throw std::invalid_argument("margin must be >= 0");
    const std::size_t n = p.degree();
    if (n == 0) return StabilityVerdict::Inside;  // constant 1, no roots

    // Scale so that |root| < 1 - margin becomes "all roots in the unit disc".
    const double c = 1.0 - margin;
    if (c <= 0.0) return StabilityVerdict::Outside;
    std::vector<Complex> f(n + 1);
    f[0] = Complex(1.0, 0.0);
    double ck = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        ck *= c;
        f[k] = p.coeffs[k - 1] / ck;
    }

    const double degen = 1e-12;
    for (std::size_t d = n; d >= 1; --d) {
        double lead = std::abs(f[0]);
        double tail = std::abs(f[d]);
        if (lead == 0.0) return StabilityVerdict::Boundary;  // recursion broke down
        double ratio = tail / lead;
        if (std::abs(ratio - 1.0) <= degen) return StabilityVerdict::Boundary;
        if (ratio > 1.0) return StabilityVerdict::Outside;
        // f <- (conj(f0) f - f_d f*) / z, degree drops by one
        Complex f0c = std::conj(f[0]);
        Complex fd = f[d];
        std::vector<Complex> g(d);
        for (std::size_t k = 0; k < d; ++k) g[k] = f0c * f[k] - fd * std::conj(f[d - k]);
        // rescale to keep magnitudes near 1
        double m = 0.0;
        for (const Complex& x : g) m = std::max(m, std::abs(x));
        if (m > 0.0) {
            for (Complex& x : g) x /= m;
        }
        f = std::move(g);
    }
    return StabilityVerdict::Inside;
}

MonicPoly poly_multiply(const MonicPoly& p, const MonicPoly& q) {
    const std::size_t dp = p.degree(), dq = q.degree();
    // full coefficient vectors including the leading 1
    std::vector<Complex> a(dp + 1), b(dq + 1);
    a[0] = b[0] = Complex(1.0, 0.0);
    std::copy(p.coeffs.begin(), p.coeffs.end(), a.begin() + 1);
    std::copy(q.coeffs.begin(), q.coeffs.end(), b.begin() + 1);
    std::vector<Complex> r(dp + dq + 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i <= dp; ++i)
        for (std::size_t j = 0; j <= dq; ++j) r[i + j] += a[i] * b[j];
    return MonicPoly(std::vector<Complex>(r.begin() + 1, r.end()));
}

SymPoint p_kn(const SymPoint& w, const SymPoint& z) {
    return to_sympoint(poly_multiply(from_sympoint(w), from_sympoint(z)));
}

double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multiset size mismatch");
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    std::vector<double> cost(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = std::abs(a[i] - b[j]);
    std::vector<int> sigma = min_cost_assignment(cost, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, cost[i * n + sigma[i]]);
    return worst;
}

double multiset_distance(const RootTuple& a, const RootTuple& b) {
    return multiset_distance(a.entries, b.entries);
}

}  // namespace symdisc::sympoly

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "symdisc/assignment.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/roots.hpp"
#include "symdisc/sympoly.hpp"

using namespace symdisc;
namespace sp = symdisc::sympoly;

namespace {

double sym_diff(const SymPoint& a, const SymPoint& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.n(); ++k) d = std::max(d, std::abs(a.coords[k] - b.coords[k]));
    return d;
}

double scale_of(const SymPoint& z) {
    double s = 1.0;
    for (const Complex& c : z.coords) s = std::max(s, std::abs(c));
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("sympoly");

TEST_CASE("symmetrize on fixed tuples") {
    SymPoint z0 = sp::symmetrize(RootTuple({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}));
    for (const Complex& c : z0.coords) CHECK(std::abs(c) == 0.0);

    SymPoint z1 = sp::symmetrize(RootTuple({{0.5, 0.0}, {-0.5, 0.0}}));
    CHECK(std::abs(z1.coords[0]) < 1e-15);
    CHECK(std::abs(z1.coords[1] - Complex(-0.25, 0.0)) < 1e-15);

    SymPoint z2 = sp::symmetrize(RootTuple({{0.4, 0.0}, {0.5, 0.0}}));
    CHECK(std::abs(z2.coords[0] - Complex(0.9, 0.0)) < 1e-15);
    CHECK(std::abs(z2.coords[1] - Complex(0.2, 0.0)) < 1e-15);
}

TEST_CASE("symmetrize is permutation invariant") {
    for (int n = 2; n <= 8; ++n) {
        std::mt19937_64 rng = make_stream(11, n);
        RootTuple t;
        for (int j = 0; j < n; ++j) t.entries.push_back(disc_point(rng));
        SymPoint z = sp::symmetrize(t);
        double tol = 1e-12 * scale_of(z);
        for (int rep = 0; rep < 20; ++rep) {
            RootTuple perm = t;
            std::shuffle(perm.entries.begin(), perm.entries.end(), rng);
            CHECK(sym_diff(sp::symmetrize(perm), z) <= tol);
        }
    }
}

TEST_CASE("sign bridge between coordinates and monic coefficients") {
    SymPoint z({{0.9, 0.0}, {0.2, 0.0}});
    MonicPoly p = sp::from_sympoint(z);
    CHECK(p.coeffs[0] == Complex(-0.9, 0.0));
    CHECK(p.coeffs[1] == Complex(0.2, 0.0));

    std::mt19937_64 rng = make_stream(12, 0);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 1 + int(uniform01(rng) * 7.99);
        std::vector<Complex> c(n);
        for (Complex& x : c) x = disc_point(rng);
        SymPoint w(c);
        SymPoint back = sp::to_sympoint(sp::from_sympoint(w));
        for (int k = 0; k < n; ++k) CHECK(back.coords[k] == w.coords[k]);  // exact
    }

    SymPoint zero({{0.0, 0.0}, {0.0, 0.0}});
    for (const Complex& c : sp::from_sympoint(zero).coeffs) CHECK(c == Complex(0.0, 0.0));
}

TEST_CASE("roots_of on factorizable points") {
    RootTuple r1 = sp::roots_of(SymPoint({{0.0, 0.0}, {-0.25, 0.0}}));
    CHECK(oracles::brute_force_multiset_distance(r1.entries, {{0.5, 0.0}, {-0.5, 0.0}}) < 1e-12);

    RootTuple r2 = sp::roots_of(SymPoint({{0.9, 0.0}, {0.2, 0.0}}));
    CHECK(oracles::brute_force_multiset_distance(r2.entries, {{0.4, 0.0}, {0.5, 0.0}}) < 1e-12);
}

TEST_CASE("roots_of round trip on separated tuples") {
    for (int n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            std::mt19937_64 rng = make_stream(13, n * 100 + rep);
            // |entries| <= 2 with pairwise separation >= 1e-3
            RootTuple t;
            while (int(t.n()) < n) {
                Complex c = 2.0 * disc_point(rng);
                bool ok = true;
                for (const Complex& l : t.entries) ok = ok && std::abs(l - c) >= 1e-3;
                if (ok) t.entries.push_back(c);
            }
            RootTuple back = sp::roots_of(sp::symmetrize(t));
            CHECK(sp::multiset_distance(back, t) <= 1e-8);
        }
    }
}

TEST_CASE("symmetrize of the fiber reproduces the point") {
    for (int rep = 0; rep < 100; ++rep) {
        std::mt19937_64 rng = make_stream(18, rep);
        int n = 1 + int(uniform01(rng) * 7.99);
        RootTuple t;
        for (int j = 0; j < n; ++j) t.entries.push_back(1.5 * disc_point(rng));
        SymPoint z = sp::symmetrize(t);
        double norm = 0.0;
        for (const Complex& c : z.coords) norm = std::max(norm, std::abs(c));
        const double tol = 1e-12;
        SymPoint back = sp::symmetrize(sp::roots_of(z, tol));
        for (int k = 0; k < n; ++k) {
            CHECK(std::abs(back.coords[k] - z.coords[k]) <= tol * (1.0 + norm));
        }
    }
}

TEST_CASE("roots_of rejects non-finite input") {
    SymPoint bad({Complex(std::numeric_limits<double>::quiet_NaN(), 0.0), Complex(0.0, 0.0)});
    CHECK_THROWS_AS(sp::roots_of(bad), NonConvergence);
}

TEST_CASE("solve_monic reports inclusion radii that cover multiple roots") {
    // (t - 1)^2: the cluster is only locatable to ~sqrt(eps)
    RootSolve s = solve_monic({{-2.0, 0.0}, {1.0, 0.0}});
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(s.roots[i] - Complex(1.0, 0.0)) <= 10.0 * std::max(s.radius[i], 1e-12));
    }
}

TEST_CASE("schur_stable on fixed polynomials") {
    CHECK(sp::schur_stable(MonicPoly({Complex(0.0, 0.0)})) == sp::StabilityVerdict::Inside);
    CHECK(sp::schur_stable(MonicPoly({{-2.0, 0.0}, {1.0, 0.0}})) != sp::StabilityVerdict::Inside);
    CHECK(sp::schur_stable(MonicPoly({{-0.9, 0.0}, {0.2, 0.0}})) == sp::StabilityVerdict::Inside);

    // margin moves the certified circle
    MonicPoly near_edge({Complex(-0.93, 0.0)});  // root 0.93
    CHECK(sp::schur_stable(near_edge, 0.0) == sp::StabilityVerdict::Inside);
    CHECK(sp::schur_stable(near_edge, 0.1) == sp::StabilityVerdict::Outside);
    CHECK_THROWS_AS(sp::schur_stable(near_edge, -0.5), std::invalid_argument);
}

TEST_CASE("schur_stable agrees with the root-modulus oracle") {
    int checked = 0;
    for (int rep = 0; checked < 2000; ++rep) {
        std::mt19937_64 rng = make_stream(14, rep);
        int n = 1 + int(uniform01(rng) * 5.99);
        RootTuple t;
        double maxmod = 0.0;
        for (int j = 0; j < n; ++j) {
            Complex c = 1.4 * disc_point(rng);
            maxmod = std::max(maxmod, std::abs(c));
            t.entries.push_back(c);
        }
        if (std::abs(maxmod - 1.0) <= 1e-6) continue;  // fuzz band
        ++checked;
        MonicPoly p = sp::from_sympoint(sp::symmetrize(t));
        sp::StabilityVerdict v = sp::schur_stable(p);
        if (maxmod < 1.0) {
            CHECK(v == sp::StabilityVerdict::Inside);
        } else {
            CHECK(v == sp::StabilityVerdict::Outside);
        }
    }
}

TEST_CASE("poly_multiply realizes the glueing map") {
    // p_{1,2}(0.5, 0.3) = pi_2(0.5, 0.3)
    SymPoint a = sp::p_kn(SymPoint({Complex(0.5, 0.0)}), SymPoint({Complex(0.3, 0.0)}));
    CHECK(std::abs(a.coords[0] - Complex(0.8, 0.0)) < 1e-15);
    CHECK(std::abs(a.coords[1] - Complex(0.15, 0.0)) < 1e-15);

    // p_{2,3}((0.9, 0.2), 0.1) = pi_3(0.4, 0.5, 0.1)
    SymPoint b = sp::p_kn(SymPoint({{0.9, 0.0}, {0.2, 0.0}}), SymPoint({Complex(0.1, 0.0)}));
    CHECK(std::abs(b.coords[0] - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(b.coords[1] - Complex(0.29, 0.0)) < 1e-14);
    CHECK(std::abs(b.coords[2] - Complex(0.02, 0.0)) < 1e-14);

    // p_{0,n} is the identity
    SymPoint z({{0.3, 0.1}, {0.05, -0.2}});
    SymPoint c = sp::p_kn(SymPoint{}, z);
    for (int k = 0; k < 2; ++k) CHECK(c.coords[k] == z.coords[k]);
}

TEST_CASE("p_kn consistency over random splits") {
    std::mt19937_64 rng = make_stream(15, 0);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 2 + int(uniform01(rng) * 5.99);
        RootTuple t;
        for (int j = 0; j < n; ++j) t.entries.push_back(disc_point(rng));
        SymPoint whole = sp::symmetrize(t);
        int k = 1 + int(uniform01(rng) * (n - 1));
        RootTuple left({t.entries.begin(), t.entries.begin() + k});
        RootTuple right({t.entries.begin() + k, t.entries.end()});
        SymPoint glued = sp::p_kn(sp::symmetrize(left), sp::symmetrize(right));
        CHECK(sym_diff(glued, whole) <= 1e-10 * scale_of(whole));
    }
}

TEST_CASE("assignment matches the brute-force optimum") {
    std::mt19937_64 rng = make_stream(16, 0);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t n = 1 + std::size_t(uniform01(rng) * 4.99);
        std::vector<double> cost(n * n);
        for (double& c : cost) c = uniform01(rng);
        std::vector<int> sigma = min_cost_assignment(cost, n);
        double total = 0.0;
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(sigma[i] >= 0);
            REQUIRE(!used[sigma[i]]);
            used[sigma[i]] = true;
            total += cost[i * n + sigma[i]];
        }
        CHECK(total <= oracles::brute_force_assignment_cost(cost, n) + 1e-12);
    }
}

TEST_CASE("multiset_distance agrees with brute force") {
    std::mt19937_64 rng = make_stream(17, 0);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + int(uniform01(rng) * 4.99);
        std::vector<Complex> a(n), b(n);
        for (Complex& c : a) c = disc_point(rng);
        for (Complex& c : b) c = disc_point(rng);
        // both minimize the assignment sum and report the worst matched edge
        double lib = sp::multiset_distance(a, b);
        double ref = oracles::brute_force_multiset_distance(a, b);
        CHECK(std::abs(lib - ref) < 1e-9);
        std::vector<Complex> shuffled = a;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(sp::multiset_distance(a, shuffled) < 1e-15);
    }
}

TEST_SUITE_END();

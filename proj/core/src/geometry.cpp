#include "symdisc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "symdisc/errors.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc::geometry {

const char* region_name(Region r) {
    switch (r) {
        case Region::Interior: return "Interior";
        case Region::TopBoundary: return "TopBoundary";
        case Region::ShilovBoundary: return "ShilovBoundary";
        case Region::Exterior: return "Exterior";
        case Region::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

const char* sample_region_name(SampleRegion r) {
    switch (r) {
        case SampleRegion::Interior: return "Interior";
        case SampleRegion::Shilov: return "Shilov";
        case SampleRegion::NearBoundary: return "NearBoundary";
    }
    return "Interior";
}

MembershipVerdict classify(const SymPoint& z, double margin) {
    if (margin < 0.0 || margin > 0.1) throw std::invalid_argument("margin must lie in [0, 0.1]");
    MembershipVerdict v;
    if (!is_valid(z)) return v;

    RootSolve fiber;
    try {
        fiber = sympoly::solve_fiber(z);
    } catch (const NonConvergence&) {
        return v;  // Indeterminate
    }
    v.witness_roots = RootTuple(fiber.roots);

    const std::size_t n = fiber.roots.size();
    double max_mod = 0.0;
    bool all_on_circle = true;
    bool any_outside = false;
    bool max_inside = true;
    double fuzz_any = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double m = std::abs(fiber.roots[i]);
        double fuzz = margin + fiber.radius[i];
        max_mod = std::max(max_mod, m);
        fuzz_any = std::max(fuzz_any, fuzz);
        if (std::abs(m - 1.0) > fuzz) all_on_circle = false;
        if (m > 1.0 + fuzz) any_outside = true;
        if (m >= 1.0 - fuzz) max_inside = false;
    }
    v.max_root_modulus = max_mod;

    if (all_on_circle) {
        v.region = Region::ShilovBoundary;
        return v;
    }
    if (any_outside) {
        v.region = Region::Exterior;
        return v;
    }
    if (!max_inside) {
        v.region = Region::TopBoundary;
        return v;
    }

    // Strictly inside by root moduli; the Schur-Cohn certificate must concur.
    sympoly::StabilityVerdict s = sympoly::schur_stable(sympoly::from_sympoint(z), margin);
    if (s == sympoly::StabilityVerdict::Inside) {
        v.region = Region::Interior;
    } else if (max_mod < 1.0 - margin - 10.0 * fuzz_any) {
        v.region = Region::Indeterminate;  // methods disagree outside the fuzz band
    } else {
        v.region = Region::TopBoundary;
    }
    return v;
}

double exhaustion(const SymPoint& z) {
    RootTuple fiber = sympoly::roots_of(z);
    double m = 0.0;
    for (const Complex& r : fiber.entries) m = std::max(m, std::abs(r));
    return std::log(m);  // log 0 = -inf at the origin
}

FiberSplit fiber_split(const SymPoint& z, Complex lambda0, int k) {
    const int n = int(z.n());
    if (k < 0 || k > n) throw std::invalid_argument("k must lie in [0, n]");
    FiberSplit out;
    if (k == 0) {
        out.near_group = SymPoint{};
        out.far_group = z;
        out.gap = std::numeric_limits<double>::infinity();
        return out;
    }
    if (k == n) {
        out.near_group = z;
        out.far_group = SymPoint{};
        out.gap = std::numeric_limits<double>::infinity();
        return out;
    }

    RootTuple fiber = sympoly::roots_of(z);
    std::vector<Complex> roots = fiber.entries;
    std::sort(roots.begin(), roots.end(), [&](const Complex& a, const Complex& b) {
        double da = std::abs(a - lambda0), db = std::abs(b - lambda0);
        if (da != db) return da < db;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.gap = std::abs(roots[k] - lambda0) - std::abs(roots[k - 1] - lambda0);
    if (out.gap <= 1e-9 * (1.0 + std::abs(lambda0))) {
        throw NotInDomain("no strict gap between the k nearest roots and the rest");
    }
    out.near_group = sympoly::symmetrize(RootTuple({roots.begin(), roots.begin() + k}));
    out.far_group = sympoly::symmetrize(RootTuple({roots.begin() + k, roots.end()}));
    return out;
}

std::vector<SymPoint> sample(SampleRegion region, int n, int count, std::uint64_t seed,
                             double near_eps) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<SymPoint> out;
    out.reserve(count);
    const std::uint64_t salt = 0x67656f6dULL + std::uint64_t(region) * 131 + std::uint64_t(n);
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng = make_stream(seed, std::uint64_t(i), salt);
        RootTuple t;
        t.entries.reserve(n);
        for (int j = 0; j < n; ++j) {
            switch (region) {
                case SampleRegion::Interior: t.entries.push_back(disc_point(rng)); break;
                case SampleRegion::Shilov: t.entries.push_back(circle_point(rng)); break;
                case SampleRegion::NearBoundary:
                    t.entries.push_back(near_boundary_point(rng, near_eps));
                    break;
            }
        }
        out.push_back(sympoly::symmetrize(t));
    }
    return out;
}

Complex MultiPoly::eval(const SymPoint& z) const {
    Complex acc(0.0, 0.0);
    for (const Term& t : terms) {
        Complex m = t.coeff;
        for (std::size_t j = 0; j < t.exponents.size() && j < z.n(); ++j) {
            for (int e = 0; e < t.exponents[j]; ++e) m *= z.coords[j];
        }
        acc += m;
    }
    return acc;
}

MultiPoly random_multipoly(int n, int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng = make_stream(seed, 0, 0x6d706f6cULL);
    MultiPoly f;
    // every multi-index of total degree <= max_degree, coefficient in the disc
    std::vector<int> expo(n, 0);
    while (true) {
        int total = std::accumulate(expo.begin(), expo.end(), 0);
        if (total <= max_degree) f.terms.push_back({expo, disc_point(rng)});
        int j = 0;
        while (j < n) {
            if (++expo[j] <= max_degree) break;
            expo[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return f;
}

MaxModulusReport max_modulus_check(const MultiPoly& f, int n, int count, std::uint64_t seed) {
    MaxModulusReport r;
    for (const SymPoint& z : sample(SampleRegion::Interior, n, count, seed)) {
        r.interior_max = std::max(r.interior_max, std::abs(f.eval(z)));
    }
    for (const SymPoint& z : sample(SampleRegion::Shilov, n, count, seed)) {
        r.shilov_max = std::max(r.shilov_max, std::abs(f.eval(z)));
    }
    double scale = std::max(1.0, r.shilov_max);
    r.pass = r.interior_max <= r.shilov_max + 1e-9 * scale;
    return r;
}

}  // namespace symdisc::geometry

#include "symdisc/maps.hpp"

#include <cmath>
#include <stdexcept>

#include "symdisc/errors.hpp"
#include "symdisc/geometry.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc::maps {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate(const BlaschkeProduct& b) {
    for (const Complex& a : b.zeros) {
        if (!(std::abs(a) < 1.0 - 1e-12)) {
            throw std::invalid_argument("Blaschke zero not strictly inside the disc");
        }
    }
    if (std::abs(std::abs(b.factor) - 1.0) > 1e-12) {
        throw std::invalid_argument("Blaschke factor must be unimodular");
    }
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex lambda) {
    Complex v = b.factor;
    for (const Complex& a : b.zeros) {
        Complex den = 1.0 - std::conj(a) * lambda;
        if (den == Complex(0.0, 0.0)) throw PoleHit("Blaschke factor pole at 1/conj(zero)");
        v *= (lambda - a) / den;
    }
    return v;
}

Complex moebius_eval(const MoebiusMap& h, Complex lambda) {
    Complex den = 1.0 - std::conj(h.alpha) * lambda;
    if (den == Complex(0.0, 0.0)) throw PoleHit("Moebius pole at 1/conj(alpha)");
    return h.factor * (lambda - h.alpha) / den;
}

Complex moebius_derivative(const MoebiusMap& h, Complex lambda) {
    Complex den = 1.0 - std::conj(h.alpha) * lambda;
    if (den == Complex(0.0, 0.0)) throw PoleHit("Moebius pole at 1/conj(alpha)");
    return h.factor * (1.0 - std::norm(h.alpha)) / (den * den);
}

MoebiusMap moebius_inverse(const MoebiusMap& h) {
    // solve mu = c(l-a)/(1-conj(a)l) for l: the inverse is again a disc
    // automorphism with zero at -c a and factor conj(c)
    MoebiusMap inv;
    inv.alpha = -h.factor * h.alpha;
    inv.factor = std::conj(h.factor);
    return inv;
}

MoebiusMap moebius_compose(const MoebiusMap& h1, const MoebiusMap& h2) {
    // matrix form (a b; c d) acting as (a l + b)/(c l + d)
    Complex a1 = h1.factor, b1 = -h1.factor * h1.alpha, c1 = -std::conj(h1.alpha), d1 = 1.0;
    Complex a2 = h2.factor, b2 = -h2.factor * h2.alpha, c2 = -std::conj(h2.alpha), d2 = 1.0;
    Complex a = a1 * a2 + b1 * c2;
    Complex b = a1 * b2 + b1 * d2;
    // lower row follows from the automorphism structure (c = conj(b), up to
    // the common phase); only a, b, d are needed to read the result back
    Complex d = c1 * b2 + d1 * d2;
    MoebiusMap out;
    out.alpha = -b / a;
    out.factor = a / d;
    out.factor /= std::abs(out.factor);  // renormalize against rounding drift
    return out;
}

BlaschkeProduct to_blaschke(const MoebiusMap& h) {
    BlaschkeProduct b;
    b.zeros = {h.alpha};
    b.factor = h.factor;
    return b;
}

Complex poly_eval(const PolySymbol& p, Complex lambda) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = p.coeffs.size(); k-- > 0;) acc = acc * lambda + p.coeffs[k];
    return acc;
}

double certified_sup_norm(const PolySymbol& p) {
    double m = 0.0;
    const int samples = 1 << 10;
    for (int i = 0; i < samples; ++i) {
        double th = 2.0 * kPi * double(i) / double(samples);
        m = std::max(m, std::abs(poly_eval(p, Complex(std::cos(th), std::sin(th)))));
    }
    return m;
}

Complex apply_symbol(const LiftedMap& f, Complex lambda) {
    if (const auto* b = std::get_if<BlaschkeProduct>(&f.symbol)) return blaschke_eval(*b, lambda);
    if (const auto* h = std::get_if<MoebiusMap>(&f.symbol)) return moebius_eval(*h, lambda);
    return poly_eval(std::get<PolySymbol>(f.symbol), lambda);
}

SymPoint lift_apply(const LiftedMap& f, const SymPoint& z) {
    if (int(z.n()) != f.n) throw std::invalid_argument("lifted map dimension mismatch");
    RootTuple fiber = sympoly::roots_of(z);
    for (Complex& l : fiber.entries) l = apply_symbol(f, l);
    return sympoly::symmetrize(fiber);
}

LiftedMap automorphism(const MoebiusMap& h, int n) {
    return LiftedMap{h, n};
}

LiftedMap inverse_automorphism(const MoebiusMap& h, int n) {
    return LiftedMap{moebius_inverse(h), n};
}

SymPoint product_map(const std::vector<BlaschkeProduct>& bs, const RootTuple& x) {
    if (bs.size() != x.n()) throw std::invalid_argument("need one Blaschke factor per coordinate");
    RootTuple image;
    image.entries.reserve(x.n());
    for (std::size_t j = 0; j < x.n(); ++j) {
        image.entries.push_back(blaschke_eval(bs[j], x.entries[j]));
    }
    return sympoly::symmetrize(image);
}

std::vector<Complex> blaschke_preimages(const BlaschkeProduct& b, Complex w) {
    const std::size_t d = b.degree();
    if (d == 0) return {};
    // ascending-power coefficients of prod (l - a_j) and prod (1 - conj(a_j) l)
    std::vector<Complex> num{Complex(1.0, 0.0)};
    std::vector<Complex> den{Complex(1.0, 0.0)};
    for (const Complex& a : b.zeros) {
        num.insert(num.begin(), Complex(0.0, 0.0));
        for (std::size_t k = 0; k + 1 < num.size(); ++k) num[k] -= a * num[k + 1];
        den.push_back(Complex(0.0, 0.0));
        for (std::size_t k = den.size(); k-- > 1;) den[k] -= std::conj(a) * den[k - 1];
    }
    // c num(l) - w den(l) = 0; |leading| >= 1 - |w| prod|a_j| > 0 for |w| <= 1
    std::vector<Complex> p(d + 1);
    for (std::size_t k = 0; k <= d; ++k) p[k] = b.factor * num[k] - w * den[k];
    Complex lead = p[d];
    std::vector<Complex> coeffs(d);
    for (std::size_t i = 0; i < d; ++i) coeffs[i] = p[d - 1 - i] / lead;
    return solve_monic(coeffs).roots;
}

PropernessReport properness_scan(const BlaschkeProduct& b, int n,
                                 const std::vector<double>& eps_grid, int count,
                                 std::uint64_t seed) {
    validate(b);
    PropernessReport rep;
    rep.eps_grid = eps_grid;
    LiftedMap f{b, n};

    for (double eps : eps_grid) {
        double worst = 0.0;
        for (const SymPoint& z :
             geometry::sample(geometry::SampleRegion::NearBoundary, n, count, seed, eps)) {
            double d = 1.0 - std::exp(geometry::exhaustion(lift_apply(f, z)));
            worst = std::max(worst, d);
        }
        rep.max_boundary_distance.push_back(worst);
    }

    for (const SymPoint& z : geometry::sample(geometry::SampleRegion::Interior, n, count, seed)) {
        geometry::MembershipVerdict v = geometry::classify(lift_apply(f, z));
        if (v.region != geometry::Region::Interior) ++rep.interior_violations;
    }

    rep.decay_ok = rep.eps_grid.size() >= 2;
    for (std::size_t i = 0; i + 1 < rep.eps_grid.size(); ++i) {
        if (!(rep.max_boundary_distance[i + 1] <= 0.5 * rep.max_boundary_distance[i])) {
            rep.decay_ok = false;
        }
    }
    rep.pass = rep.decay_ok && rep.interior_violations == 0;
    return rep;
}

}  // namespace symdisc::maps

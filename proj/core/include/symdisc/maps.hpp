#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "symdisc/types.hpp"

namespace symdisc::maps {

/// Finite Blaschke product: unimodular factor times automorphism factors
/// (lambda - a_j)/(1 - conj(a_j) lambda). Degree 0 is a unimodular constant.
struct BlaschkeProduct {
    std::vector<Complex> zeros;
    Complex factor{1.0, 0.0};

    std::size_t degree() const { return zeros.size(); }
};

/// Throws std::invalid_argument unless all zeros are strictly inside the
/// disc and the factor is unimodular.
void validate(const BlaschkeProduct& b);

/// c prod (lambda - a_j)/(1 - conj(a_j) lambda), each factor evaluated as
/// one quotient so the near-circle cancellations pair up. Throws PoleHit at
/// the reflected points 1/conj(a_j).
Complex blaschke_eval(const BlaschkeProduct& b, Complex lambda);

/// Disc automorphism h(lambda) = factor (lambda - alpha)/(1 - conj(alpha) lambda).
struct MoebiusMap {
    Complex alpha{0.0, 0.0};
    Complex factor{1.0, 0.0};
};

Complex moebius_eval(const MoebiusMap& h, Complex lambda);
Complex moebius_derivative(const MoebiusMap& h, Complex lambda);
MoebiusMap moebius_inverse(const MoebiusMap& h);
/// h1 after h2, renormalized back to (alpha, factor) form.
MoebiusMap moebius_compose(const MoebiusMap& h1, const MoebiusMap& h2);
BlaschkeProduct to_blaschke(const MoebiusMap& h);

/// Polynomial symbol psi(lambda) = sum coeffs[k] lambda^k for the lifted
/// maps that are not Blaschke products; the disc bound is certified by
/// sampling the circle.
struct PolySymbol {
    std::vector<Complex> coeffs;
};

Complex poly_eval(const PolySymbol& p, Complex lambda);
/// max |psi| over 1024 equispaced circle points.
double certified_sup_norm(const PolySymbol& p);

/// Self-map of the symmetrized polydisc induced by a scalar symbol acting
/// on the fiber: z -> symmetrize(psi(fiber(z))).
struct LiftedMap {
    std::variant<BlaschkeProduct, MoebiusMap, PolySymbol> symbol;
    int n = 1;
};

Complex apply_symbol(const LiftedMap& f, Complex lambda);
SymPoint lift_apply(const LiftedMap& f, const SymPoint& z);

LiftedMap automorphism(const MoebiusMap& h, int n);
LiftedMap inverse_automorphism(const MoebiusMap& h, int n);

/// The product proper map disc^n -> G_n: symmetrize(B_1(x_1), ..., B_n(x_n)).
/// Here x is an ordered polydisc point, not a fiber.
SymPoint product_map(const std::vector<BlaschkeProduct>& bs, const RootTuple& x);

/// Solutions of B(lambda) = w counted with multiplicity; for |w| < 1 all of
/// them lie in the disc. Empty for degree 0.
std::vector<Complex> blaschke_preimages(const BlaschkeProduct& b, Complex w);

struct PropernessReport {
    std::vector<double> eps_grid;
    std::vector<double> max_boundary_distance;  // max over samples of 1 - exp(exhaustion(f(z)))
    int interior_violations = 0;                // interior samples whose image left the domain
    bool decay_ok = false;                      // >= 2x decrease per decade of eps
    bool pass = false;
};

/// Empirical boundary-to-boundary check: near-boundary samples at each eps
/// must land within a shrinking boundary collar, and interior samples must
/// stay interior.
PropernessReport properness_scan(const BlaschkeProduct& b, int n,
                                 const std::vector<double>& eps_grid, int count,
                                 std::uint64_t seed);

}  // namespace symdisc::maps

#pragma once

#include <cstdint>
#include <vector>

#include "symdisc/types.hpp"

namespace symdisc::geometry {

enum class Region { Interior, TopBoundary, ShilovBoundary, Exterior, Indeterminate };

struct MembershipVerdict {
    Region region = Region::Indeterminate;
    double max_root_modulus = 0.0;
    RootTuple witness_roots;
};

const char* region_name(Region r);

/// Membership of z in the symmetrized polydisc, its boundary, or the
/// distinguished (torus image) part of the boundary. Root moduli decide,
/// the Schur-Cohn test certifies; a disagreement outside the fuzz band is
/// reported as Indeterminate rather than resolved by fiat. The fuzz band
/// around the unit circle is margin widened by each root's inclusion
/// radius, so multiple boundary roots (located only to sqrt(eps)) still
/// classify honestly.
MembershipVerdict classify(const SymPoint& z, double margin = 1e-9);

/// max_j log|lambda_j| over the fiber of z: negative exactly on the open
/// domain, 0 on the boundary, -inf only at the origin.
double exhaustion(const SymPoint& z);

struct FiberSplit {
    SymPoint near_group;  // pi_k of the k roots nearest lambda0
    SymPoint far_group;   // pi_{n-k} of the rest
    double gap;           // distance separation between ranks k and k+1
};

/// Splits the fiber of z by distance to lambda0 into the k nearest roots
/// and the n-k remaining ones. Throws NotInDomain when the two groups are
/// not separated by a strict gap (z outside pi_n of the splitting domain).
FiberSplit fiber_split(const SymPoint& z, Complex lambda0, int k);

enum class SampleRegion { Interior, Shilov, NearBoundary };

const char* sample_region_name(SampleRegion r);

/// Deterministic pushforward samplers: disc^n, torus^n, or an annulus of
/// width eps at the boundary, through symmetrize. Sample i depends only on
/// (seed, region, n, i), never on thread layout.
std::vector<SymPoint> sample(SampleRegion region, int n, int count, std::uint64_t seed,
                             double near_eps = 1e-3);

/// Polynomial test function in the symmetrized coordinates z_1..z_n.
struct MultiPoly {
    struct Term {
        std::vector<int> exponents;  // one per coordinate
        Complex coeff;
    };
    std::vector<Term> terms;

    Complex eval(const SymPoint& z) const;
};

/// Random polynomial of total degree <= max_degree with coefficients in the
/// unit disc, for max-modulus experiments.
MultiPoly random_multipoly(int n, int max_degree, std::uint64_t seed);

struct MaxModulusReport {
    double interior_max = 0.0;
    double shilov_max = 0.0;
    bool pass = false;
};

/// Samples |f| over interior points and over the torus image and checks the
/// maximum-modulus inequality between the two.
MaxModulusReport max_modulus_check(const MultiPoly& f, int n, int count, std::uint64_t seed);

}  // namespace symdisc::geometry

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace symdisc {

using Complex = std::complex<double>;

/// An n-tuple of fiber coordinates. Semantically unordered: every consumer
/// must give the same answer under permutation of the entries.
struct RootTuple {
    std::vector<Complex> entries;

    RootTuple() = default;
    explicit RootTuple(std::vector<Complex> e) : entries(std::move(e)) {}

    std::size_t n() const { return entries.size(); }
};

/// A point in symmetrized coordinates: coords[k-1] is the value of the
/// k-th elementary symmetric polynomial of some fiber tuple.
struct SymPoint {
    std::vector<Complex> coords;

    SymPoint() = default;
    explicit SymPoint(std::vector<Complex> c) : coords(std::move(c)) {}

    std::size_t n() const { return coords.size(); }
};

/// Monic polynomial p(t) = t^n + coeffs[0] t^(n-1) + ... + coeffs[n-1].
/// Degree 0 (empty coeffs) is the constant polynomial 1; it only appears
/// as the neutral element of poly_multiply.
struct MonicPoly {
    std::vector<Complex> coeffs;

    MonicPoly() = default;
    explicit MonicPoly(std::vector<Complex> c) : coeffs(std::move(c)) {}

    std::size_t degree() const { return coeffs.size(); }
};

bool all_finite(const std::vector<Complex>& v);

inline bool is_valid(const RootTuple& t) { return t.n() >= 1 && all_finite(t.entries); }
inline bool is_valid(const SymPoint& z) { return z.n() >= 1 && all_finite(z.coords); }

}  // namespace symdisc

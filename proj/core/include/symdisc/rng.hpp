#pragma once

#include <cstdint>
#include <random>

#include "symdisc/types.hpp"

namespace symdisc {

/// splitmix64 step; used to derive independent seeds from (seed, index) pairs
/// so that sample i is the same no matter how work is split across threads.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic per-index generator: stream(seed, i) is independent of the
/// order in which indices are consumed.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= index * 0xff51afd7ed558ccdULL + salt * 0xc4ceb9fe1a85ec53ULL;
    std::uint64_t b = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

inline double uniform01(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// Uniform w.r.t. area on the open unit disc.
inline Complex disc_point(std::mt19937_64& rng) {
    double r = std::sqrt(uniform01(rng));
    double th = 2.0 * 3.14159265358979323846 * uniform01(rng);
    return Complex(r * std::cos(th), r * std::sin(th));
}

/// Uniform on the unit circle.
inline Complex circle_point(std::mt19937_64& rng) {
    double th = 2.0 * 3.14159265358979323846 * uniform01(rng);
    return Complex(std::cos(th), std::sin(th));
}

/// Modulus in [1-eps, 1), angle uniform.
inline Complex near_boundary_point(std::mt19937_64& rng, double eps) {
    double r = 1.0 - eps + eps * uniform01(rng);
    double th = 2.0 * 3.14159265358979323846 * uniform01(rng);
    return Complex(r * std::cos(th), r * std::sin(th));
}

}  // namespace symdisc

#include <benchmark/benchmark.h>

#include <random>

#include "symdisc/bergman.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/spectral.hpp"
#include "symdisc/sympoly.hpp"

using namespace symdisc;

namespace {

RootTuple random_tuple(int n, std::uint64_t seed) {
    std::mt19937_64 rng = make_stream(seed, 0);
    RootTuple t;
    while (int(t.n()) < n) {
        Complex c = 0.95 * disc_point(rng);
        bool ok = true;
        for (const Complex& l : t.entries) ok = ok && std::abs(l - c) >= 0.05;
        if (ok) t.entries.push_back(c);
    }
    return t;
}

void BM_roots_of(benchmark::State& state) {
    const int n = int(state.range(0));
    SymPoint z = sympoly::symmetrize(random_tuple(n, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sympoly::roots_of(z));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_roots_of)->DenseRange(2, 8, 2)->Complexity();

void BM_schur_stable(benchmark::State& state) {
    const int n = int(state.range(0));
    MonicPoly p = sympoly::from_sympoint(sympoly::symmetrize(random_tuple(n, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sympoly::schur_stable(p));
    }
}
BENCHMARK(BM_schur_stable)->DenseRange(2, 8, 2);

void BM_kernel_general(benchmark::State& state) {
    const int n = int(state.range(0));
    RootTuple lam = random_tuple(n, 3), mu = random_tuple(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bergman::kernel_general(lam, mu));
    }
}
BENCHMARK(BM_kernel_general)->DenseRange(2, 8, 2);

void BM_kernel_closed2(benchmark::State& state) {
    RootTuple lam = random_tuple(2, 5), mu = random_tuple(2, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bergman::kernel_closed2_roots(lam, mu));
    }
}
BENCHMARK(BM_kernel_closed2);

void BM_psi(benchmark::State& state) {
    const int n = int(state.range(0));
    spectral::Matrix w = spectral::random_matrix(n, 7, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::psi(w));
    }
}
BENCHMARK(BM_psi)->DenseRange(2, 8, 2);

void BM_path_eval(benchmark::State& state) {
    const int n = int(state.range(0));
    spectral::Matrix w = spectral::sample_spectral_ball(n, 8, 0);
    spectral::SpectrumPath p = spectral::constant_spectrum_path(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::path_eval(p, Complex(0.5, 0.0)));
    }
}
BENCHMARK(BM_path_eval)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();

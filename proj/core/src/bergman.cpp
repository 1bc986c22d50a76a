#include "symdisc/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "symdisc/errors.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc::bergman {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kEps = std::numeric_limits<double>::epsilon();

struct DetResult {
    Complex det{0.0, 0.0};
    double growth = 1.0;     // pivot growth factor
    double hadamard = 1.0;   // product of row 2-norms of the input
};

// LU with partial pivoting on a row-major buffer; n <= 8 here, so the only
// thing that matters is the conditioning report, not the flop count.
DetResult lu_det(std::vector<Complex> a, std::size_t n) {
    DetResult r;
    double max0 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double m = std::abs(a[i * n + j]);
            max0 = std::max(max0, m);
            row += m * m;
        }
        r.hadamard *= std::sqrt(row);
    }
    double maxall = max0;
    Complex det(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = -det;
        }
        Complex d = a[k * n + k];
        if (d == Complex(0.0, 0.0)) {
            r.det = Complex(0.0, 0.0);
            r.growth = maxall / std::max(max0, 1e-300);
            return r;
        }
        det *= d;
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex f = a[i * n + k] / d;
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] -= f * a[k * n + j];
                maxall = std::max(maxall, std::abs(a[i * n + j]));
            }
        }
    }
    r.det = det;
    r.growth = maxall / std::max(max0, 1e-300);
    return r;
}

// relative error accumulated by the difference products
double vandermonde_condition(const RootTuple& t) {
    double acc = 0.0;
    const std::size_t n = t.n();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            double num = std::abs(t.entries[j]) + std::abs(t.entries[k]);
            double den = std::abs(t.entries[j] - t.entries[k]);
            acc += kEps * (1.0 + num / std::max(den, 1e-300));
        }
    }
    return acc;
}

KernelValue closed2_impl(const SymPoint& z, const SymPoint& w, const RootTuple& lam,
                         const RootTuple& mu) {
    Complex num = 2.0 - std::conj(w.coords[0]) * z.coords[0] +
                  2.0 * z.coords[1] * std::conj(w.coords[1]);
    Complex prod(1.0, 0.0);
    double cancel = 0.0;
    for (const Complex& l : lam.entries) {
        for (const Complex& m : mu.entries) {
            Complex f = 1.0 - l * std::conj(m);
            prod *= f;
            cancel += kEps * (1.0 + std::abs(l) * std::abs(m)) / std::max(std::abs(f), 1e-300);
        }
    }
    KernelValue kv;
    kv.path = KernelPath::ClosedForm2;
    kv.value = num / (kPi * kPi * prod * prod);
    double num_scale = 2.0 + std::abs(z.coords[0]) * std::abs(w.coords[0]) +
                       2.0 * std::abs(z.coords[1]) * std::abs(w.coords[1]);
    kv.condition_estimate =
        kEps * num_scale / std::max(std::abs(num), 1e-300) + 2.0 * cancel + 16.0 * kEps;
    return kv;
}

KernelValue kernel_general_raw(const RootTuple& lambda, const RootTuple& mu) {
    const std::size_t n = lambda.n();
    std::vector<Complex> a(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex d = 1.0 - lambda.entries[j] * std::conj(mu.entries[k]);
            a[j * n + k] = 1.0 / (d * d);
        }
    }
    DetResult det = lu_det(std::move(a), n);
    Complex jl = jacobian_det(lambda);
    Complex jm = jacobian_det(mu);
    KernelValue kv;
    kv.path = KernelPath::Generic;
    kv.value = det.det / (std::pow(kPi, double(n)) * jl * std::conj(jm));
    double det_rel = double(n) * double(n) * kEps * det.growth * det.hadamard /
                     std::max(std::abs(det.det), 1e-300);
    kv.condition_estimate = det_rel + vandermonde_condition(lambda) + vandermonde_condition(mu);
    return kv;
}

}  // namespace

const char* kernel_path_name(KernelPath p) {
    switch (p) {
        case KernelPath::Generic: return "Generic";
        case KernelPath::Confluent: return "Confluent";
        case KernelPath::ClosedForm2: return "ClosedForm2";
    }
    return "Generic";
}

Complex jacobian_det(const RootTuple& lambda) {
    Complex prod(1.0, 0.0);
    const std::size_t n = lambda.n();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) prod *= lambda.entries[j] - lambda.entries[k];
    return prod;
}

double min_pair_separation(const RootTuple& t) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < t.n(); ++j)
        for (std::size_t k = j + 1; k < t.n(); ++k)
            m = std::min(m, std::abs(t.entries[j] - t.entries[k]));
    return m;
}

double confluence_threshold(const RootTuple& t) {
    double mx = 0.0;
    for (const Complex& l : t.entries) mx = std::max(mx, std::abs(l));
    return 1e-4 * (1.0 + mx);
}

CriticalSetQuery critical_set_query(const RootTuple& t) {
    CriticalSetQuery q;
    q.min_pair_separation = min_pair_separation(t);
    q.confluent = q.min_pair_separation < confluence_threshold(t);
    return q;
}

bool is_confluent(const RootTuple& t) {
    return critical_set_query(t).confluent;
}

KernelValue kernel_general(const RootTuple& lambda, const RootTuple& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("tuple dimension mismatch");
    if (is_confluent(lambda) || is_confluent(mu)) {
        throw ConfluentInput("tuple inside the confluence band; use kernel_confluent");
    }
    return kernel_general_raw(lambda, mu);
}

KernelValue kernel_closed2(const SymPoint& z, const SymPoint& w) {
    if (z.n() != 2 || w.n() != 2) throw std::invalid_argument("closed form is n = 2 only");
    return closed2_impl(z, w, sympoly::roots_of(z), sympoly::roots_of(w));
}

KernelValue kernel_closed2_roots(const RootTuple& lambda, const RootTuple& mu) {
    if (lambda.n() != 2 || mu.n() != 2) throw std::invalid_argument("closed form is n = 2 only");
    return closed2_impl(sympoly::symmetrize(lambda), sympoly::symmetrize(mu), lambda, mu);
}

ClusterInfo cluster_roots(const RootTuple& t) {
    const std::size_t n = t.n();
    const double tau = confluence_threshold(t);
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    // union-find on the "closer than tau" graph
    std::function<int(int)> find = [&](int i) {
        while (comp[i] != i) i = comp[i] = comp[comp[i]];
        return i;
    };
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            if (std::abs(t.entries[j] - t.entries[k]) < tau) comp[find(int(j))] = find(int(k));
        }
    }
    std::vector<std::vector<int>> buckets(n);
    for (std::size_t i = 0; i < n; ++i) buckets[find(int(i))].push_back(int(i));
    ClusterInfo info;
    for (auto& b : buckets) {
        if (b.size() >= 2) {
            info.vanishing_order += int(b.size() * (b.size() - 1) / 2);
            info.groups.push_back(std::move(b));
        }
    }
    return info;
}

RootTuple spread_clusters(const RootTuple& t, const ClusterInfo& info, double eps) {
    RootTuple out = t;
    for (const auto& g : info.groups) {
        Complex c(0.0, 0.0);
        for (int i : g) c += t.entries[i];
        c /= double(g.size());
        const double step = 2.0 * kPi / double(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) {
            double th = step * double(j);
            out.entries[g[j]] = c + eps * Complex(std::cos(th), std::sin(th));
        }
    }
    return out;
}

Complex extrapolated_kernel(const RootTuple& lambda, const RootTuple& mu,
                            const std::vector<double>& scales, int power,
                            double* disagreement) {
    const ClusterInfo cl = cluster_roots(lambda);
    const ClusterInfo cm = cluster_roots(mu);
    const std::size_t m = scales.size();
    if (m < 2) throw std::invalid_argument("need at least two perturbation scales");

    std::vector<double> u(m);
    std::vector<Complex> t(m);
    for (std::size_t i = 0; i < m; ++i) {
        u[i] = std::pow(scales[i], double(power));
        t[i] = kernel_general_raw(spread_clusters(lambda, cl, scales[i]),
                                  spread_clusters(mu, cm, scales[i]))
                   .value;
    }
    // Neville tableau evaluated at eps = 0; t[m-1] after sweep j holds the
    // degree-j extrapolant through the j+1 smallest scales.
    Complex prev = t[m - 1];
    Complex best = t[m - 1];
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = m - 1; i >= j; --i) {
            t[i] = (u[i - j] * t[i] - u[i] * t[i - 1]) / (u[i - j] - u[i]);
        }
        prev = best;
        best = t[m - 1];
    }
    if (disagreement) {
        *disagreement = std::abs(best - prev) / std::max(std::abs(best), 1e-300);
    }
    return best;
}

KernelValue kernel_confluent(const RootTuple& lambda, const RootTuple& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("tuple dimension mismatch");
    const std::size_t n = lambda.n();
    if (n == 2) return kernel_closed2_roots(lambda, mu);

    const ClusterInfo cl = cluster_roots(lambda);
    const ClusterInfo cm = cluster_roots(mu);
    if (cl.groups.empty() && cm.groups.empty()) return kernel_general_raw(lambda, mu);

    // extrapolation variable: gcd of the cluster sizes (the symmetrized
    // point moves like eps^m for a size-m cluster)
    int g = 0;
    for (const auto& grp : cl.groups) g = std::gcd(g, int(grp.size()));
    for (const auto& grp : cm.groups) g = std::gcd(g, int(grp.size()));
    if (g == 0) g = 1;

    // Scale ladder: large enough that the order-q Vandermonde vanishing does
    // not drown the determinant in roundoff, small enough to stay clear of
    // the remaining structure.
    const int q = cl.vanishing_order + cm.vanishing_order;
    double eps0 = std::max(1e-5, std::pow(kEps / 1e-9, 1.0 / double(q)));
    double cap = 0.2;
    auto intercluster = [&](const RootTuple& t, const ClusterInfo& info) {
        std::vector<Complex> centers;
        std::vector<bool> in_cluster(t.n(), false);
        for (const auto& grp : info.groups) {
            Complex c(0.0, 0.0);
            for (int i : grp) {
                c += t.entries[i];
                in_cluster[i] = true;
            }
            centers.push_back(c / double(grp.size()));
        }
        for (std::size_t i = 0; i < t.n(); ++i)
            if (!in_cluster[i]) centers.push_back(t.entries[i]);
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < centers.size(); ++a)
            for (std::size_t b = a + 1; b < centers.size(); ++b)
                d = std::min(d, std::abs(centers[a] - centers[b]));
        return d;
    };
    // largest node is 8 eps0 <= cap; cap at a quarter of the inter-cluster
    // distance keeps spread points from distinct clusters apart
    cap = std::min(cap, intercluster(lambda, cl) / 4.0);
    cap = std::min(cap, intercluster(mu, cm) / 4.0);
    eps0 = std::min(eps0, cap / 8.0);
    if (!(eps0 > 0.0)) throw ExtrapolationUnstable("no usable perturbation scale", 1.0);

    double disagreement = 0.0;
    Complex value = extrapolated_kernel(
        lambda, mu, {eps0, 2.0 * eps0, 4.0 * eps0, 8.0 * eps0}, g, &disagreement);
    if (disagreement > 1e-6) {
        throw ExtrapolationUnstable("perturbation scales disagree", disagreement);
    }
    // collapsing a loose cluster to its centroid moves the symmetrized
    // point by O(spread^2); charge that to the error budget
    double bias = 0.0;
    auto cluster_bias = [&](const RootTuple& t, const ClusterInfo& info) {
        for (const auto& grp : info.groups) {
            Complex c(0.0, 0.0);
            for (int i : grp) c += t.entries[i];
            c /= double(grp.size());
            for (int i : grp) bias = std::max(bias, std::norm(t.entries[i] - c));
        }
    };
    cluster_bias(lambda, cl);
    cluster_bias(mu, cm);
    KernelValue kv;
    kv.path = KernelPath::Confluent;
    kv.value = value;
    kv.condition_estimate = disagreement + kEps / std::pow(eps0, double(q)) + bias;
    return kv;
}

double transformation_check(const maps::MoebiusMap& h, const RootTuple& lambda,
                            const RootTuple& mu) {
    auto push = [&](const RootTuple& t) {
        RootTuple img = t;
        for (Complex& l : img.entries) l = maps::moebius_eval(h, l);
        return img;
    };
    auto jac = [&](const RootTuple& t, const RootTuple& img) {
        Complex dprod(1.0, 0.0);
        for (const Complex& l : t.entries) dprod *= maps::moebius_derivative(h, l);
        return dprod * jacobian_det(img) / jacobian_det(t);
    };
    RootTuple hl = push(lambda), hm = push(mu);
    Complex k0 = kernel_general(lambda, mu).value;
    Complex k1 = kernel_general(hl, hm).value;
    Complex jz = jac(lambda, hl), jw = jac(mu, hm);
    return std::abs(k1 * jz * std::conj(jw) - k0) / std::abs(k0);
}

LuQiKengReport luqikeng_scan(long count, std::uint64_t seed, int threads) {
    LuQiKengReport rep;
    rep.count = count;
    if (count < 1) return rep;
    if (threads < 1) threads = 1;

    struct Local {
        double min_abs = std::numeric_limits<double>::infinity();
        long argmin = -1;
        long failures = 0;
    };
    auto draw_pair = [&](long i, RootTuple& lam, RootTuple& mu) {
        std::mt19937_64 rng = make_stream(seed, std::uint64_t(i), 0x6c756b71ULL);
        lam.entries = {disc_point(rng), disc_point(rng)};
        mu.entries = {disc_point(rng), disc_point(rng)};
        if (i % 2 == 1) mu.entries[1] = Complex(0.0, 0.0);  // the w2 = 0 slice
    };

    std::vector<Local> locals(threads);
    auto work = [&](int tid) {
        Local& loc = locals[tid];
        for (long i = tid; i < count; i += threads) {
            RootTuple lam, mu;
            draw_pair(i, lam, mu);
            double v = std::abs(kernel_closed2_roots(lam, mu).value);
            if (!(v > 0.0) || !std::isfinite(v)) ++loc.failures;
            if (v < loc.min_abs || (v == loc.min_abs && i < loc.argmin)) {
                loc.min_abs = v;
                loc.argmin = i;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    Local best;
    for (const Local& loc : locals) {
        best.failures += loc.failures;
        if (loc.argmin < 0) continue;
        if (loc.min_abs < best.min_abs ||
            (loc.min_abs == best.min_abs && loc.argmin < best.argmin)) {
            best.min_abs = loc.min_abs;
            best.argmin = loc.argmin;
        }
    }
    rep.min_abs = best.min_abs;
    rep.failures = best.failures;
    if (best.argmin >= 0) {
        RootTuple lam, mu;
        draw_pair(best.argmin, lam, mu);
        rep.argmin_z = sympoly::symmetrize(lam);
        rep.argmin_w = sympoly::symmetrize(mu);
    }
    rep.pass = rep.failures == 0 && rep.min_abs > 0.0;
    return rep;
}

}  // namespace symdisc::bergman

#include "symdisc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "symdisc/assignment.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/rng.hpp"
#include "symdisc/sympoly.hpp"

namespace symdisc::spectral {

SymPoint psi(const Matrix& W) {
    const Eigen::Index n = W.rows();
    if (n != W.cols() || n < 1) throw std::invalid_argument("square matrix required");
    // Faddeev-LeVerrier: A_k = W (A_{k-1} + c_{k-1} I), c_k = -tr(A_k)/k,
    // char poly t^n + c_1 t^(n-1) + ... + c_n.
    Matrix A = W;
    std::vector<Complex> c(n);
    c[0] = -A.trace();
    for (Eigen::Index k = 2; k <= n; ++k) {
        A = W * (A + c[k - 2] * Matrix::Identity(n, n));
        c[k - 1] = -A.trace() / double(k);
    }
    std::vector<Complex> z(n);
    double sign = -1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        z[k] = sign * c[k];
        sign = -sign;
    }
    return SymPoint(std::move(z));
}

std::vector<Complex> eigenvalues(const Matrix& W) {
    Eigen::ComplexEigenSolver<Matrix> es(W, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw DecompositionFailure("eigenvalue iteration failed");
    std::vector<Complex> out(W.rows());
    for (Eigen::Index i = 0; i < W.rows(); ++i) out[i] = es.eigenvalues()(i);
    return out;
}

double spectral_radius(const Matrix& W) {
    double r = 0.0;
    for (const Complex& l : eigenvalues(W)) r = std::max(r, std::abs(l));
    return r;
}

geometry::MembershipVerdict in_spectral_ball(const Matrix& W, double margin) {
    return geometry::classify(psi(W), margin);
}

SpectrumPath constant_spectrum_path(const Matrix& W) {
    Eigen::ComplexSchur<Matrix> schur(W);
    if (schur.info() != Eigen::Success) throw DecompositionFailure("Schur iteration failed");
    SpectrumPath p;
    p.S = schur.matrixT();
    // Q is unitary, so the principal log is well conditioned and exp(Y) = Q.
    p.Y = schur.matrixU().log();
    return p;
}

Matrix path_eval(const SpectrumPath& p, Complex t) {
    const Eigen::Index n = p.S.rows();
    Matrix st = p.S.diagonal().asDiagonal();
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) st(j, k) = t * p.S(j, k);
    Matrix ty = t * p.Y;
    return ty.exp() * st * (-ty).exp();
}

Complex MatrixPolynomial::scalar(Complex lambda) const {
    Complex acc(0.0, 0.0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * lambda + coeffs[k];
    return acc;
}

Matrix apply(const MatrixPolynomial& f, const Matrix& W) {
    const Eigen::Index n = W.rows();
    Matrix arg = W;
    if (f.conjugation) arg = *f.conjugation * W * f.conjugation->inverse();
    Matrix acc = Matrix::Zero(n, n);
    for (std::size_t k = f.coeffs.size(); k-- > 0;) {
        acc = acc * arg + f.coeffs[k] * Matrix::Identity(n, n);
    }
    return acc;
}

Matrix sample_spectral_ball(int n, std::uint64_t seed, std::uint64_t index, double radius) {
    std::mt19937_64 rng = make_stream(seed, index, 0x73706563ULL);
    // separated spectrum keeps the eigenvalue oracle well conditioned
    std::vector<Complex> lam;
    while (int(lam.size()) < n) {
        Complex c = radius * disc_point(rng);
        bool ok = true;
        for (const Complex& l : lam) ok = ok && std::abs(l - c) > 0.02;
        if (ok) lam.push_back(c);
    }
    Matrix D = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) D(i, i) = lam[i];
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix X(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) X(i, j) = disc_point(rng);
        Eigen::JacobiSVD<Matrix> svd(X);
        double smin = svd.singularValues()(n - 1);
        double smax = svd.singularValues()(0);
        if (smin > 0.0 && smax / smin < 100.0) return X * D * X.inverse();
    }
    return D;  // conditioning draw failed; the diagonal matrix is still valid
}

Matrix random_matrix(int n, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng = make_stream(seed, index, 0x72616e64ULL);
    // log-uniform scale so verdicts land on both sides of the unit circle
    double scale = std::pow(10.0, -1.0 + 2.0 * uniform01(rng)) / std::sqrt(double(n));
    Matrix W(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W(i, j) = scale * disc_point(rng);
    return W;
}

DescentReport descent_check(const MatrixPolynomial& f, int n, int samples, std::uint64_t seed,
                            double tol) {
    DescentReport rep;
    rep.samples = samples;
    std::vector<double> residuals;
    residuals.reserve(samples);
    double worst = -1.0;
    for (int s = 0; s < samples; ++s) {
        Matrix W = sample_spectral_ball(n, seed, std::uint64_t(s));
        std::vector<Complex> lam = eigenvalues(W);
        Matrix D = Matrix::Zero(n, n);
        for (int i = 0; i < n; ++i) D(i, i) = lam[i];
        Matrix FW = spectral::apply(f, W);
        SymPoint a = psi(FW);
        SymPoint b = psi(spectral::apply(f, D));
        double r = 0.0;
        for (int k = 0; k < n; ++k) r = std::max(r, std::abs(a.coords[k] - b.coords[k]));
        residuals.push_back(r);
        if (r > worst) {
            worst = r;
            rep.worst_index = s;
        }
        if (spectral_radius(FW) >= 1.0) ++rep.range_violations;
    }
    std::sort(residuals.begin(), residuals.end());
    auto pct = [&](double p) {
        return residuals[std::min(std::size_t(p * residuals.size()), residuals.size() - 1)];
    };
    rep.max_residual = residuals.back();
    rep.p50 = pct(0.50);
    rep.p90 = pct(0.90);
    rep.p99 = pct(0.99);
    rep.pass = rep.max_residual <= tol;
    return rep;
}

SpectrumActionReport spectrum_action_check(const MatrixPolynomial& f,
                                           const std::optional<maps::BlaschkeProduct>& expected,
                                           int n, int samples, std::uint64_t seed, double tol) {
    SpectrumActionReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Matrix W = sample_spectral_ball(n, seed, std::uint64_t(s));
        std::vector<Complex> lam = eigenvalues(W);
        std::vector<Complex> image = eigenvalues(spectral::apply(f, W));
        std::vector<Complex> mapped(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) {
            mapped[i] = expected ? maps::blaschke_eval(*expected, lam[i]) : f.scalar(lam[i]);
        }
        double d = sympoly::multiset_distance(mapped, image);
        if (d > rep.max_mismatch) {
            rep.max_mismatch = d;
            rep.worst_index = s;
        }
    }
    rep.pass = rep.max_mismatch <= tol;
    return rep;
}

}  // namespace symdisc::spectral

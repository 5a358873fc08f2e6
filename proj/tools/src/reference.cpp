// Copyright 2026 The y00sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "y00tools/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "y00/rng.hpp"

namespace y00::reference {

std::size_t fock_dimension(std::span<const CoherentPoint> points) {
    double s = 0.0;
    for (const auto &p : points) s = std::max(s, p.photons());
    // Poisson(s) tail past s + 12 sqrt(s) + 40 is far below 1e-30.
    return static_cast<std::size_t>(std::ceil(s + 12.0 * std::sqrt(s) + 40.0));
}

Eigen::VectorXcd fock_vector(std::complex<double> alpha, std::size_t dimension) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dimension));
    const double s = std::norm(alpha);
    std::complex<double> c(std::exp(-0.5 * s), 0.0);
    for (std::size_t n = 0; n < dimension; ++n) {
        v(static_cast<Eigen::Index>(n)) = c;
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

namespace {

Eigen::MatrixXcd fock_columns(std::span<const CoherentPoint> points) {
    const auto dim = fock_dimension(points);
    Eigen::MatrixXcd psi(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        psi.col(static_cast<Eigen::Index>(i)) = fock_vector(points[i].amplitude, dim);
    return psi;
}

// Modified Gram-Schmidt; columns whose residual norm falls below tol are dropped.
Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd &psi, double tol) {
    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index j = 0; j < psi.cols(); ++j) {
        Eigen::VectorXcd v = psi.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &b : basis) v -= b.dot(v) * b;
        const double nv = v.norm();
        if (nv > tol) basis.push_back(v / nv);
    }
    Eigen::MatrixXcd q(psi.rows(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = basis[i];
    return q;
}

} // namespace

double helstrom_mixed_dense(std::span<const CoherentPoint> points, std::span<const double> weights0,
                            std::span<const double> weights1, double p0, double p1) {
    if (weights0.size() != points.size() || weights1.size() != points.size())
        throw std::invalid_argument("helstrom_mixed_dense: weight length mismatch");
    const auto psi = fock_columns(points);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(psi.rows(), psi.rows());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double w = p1 * weights1[i] - p0 * weights0[i];
        if (w != 0.0) {
            const auto col = psi.col(static_cast<Eigen::Index>(i));
            op += w * col * col.adjoint();
        }
    }
    const auto q = orthonormal_basis(psi, 1e-7);
    const Eigen::MatrixXcd reduced = q.adjoint() * op * q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(reduced, Eigen::EigenvaluesOnly);
    const double norm = es.eigenvalues().cwiseAbs().sum();
    return std::clamp(0.5 - 0.5 * norm, 0.0, 1.0);
}

double srm_success_dense(std::span<const CoherentPoint> points, std::span<const double> priors) {
    const auto psi = fock_columns(points);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(psi.rows(), psi.rows());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto col = psi.col(static_cast<Eigen::Index>(i));
        rho += priors[i] * col * col.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    const auto &ev = es.eigenvalues();
    const double cut = 1e-13 * ev.maxCoeff();
    Eigen::VectorXd inv_sqrt(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) inv_sqrt(k) = ev(k) > cut ? 1.0 / std::sqrt(ev(k)) : 0.0;
    const Eigen::MatrixXcd rho_inv_sqrt = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    double success = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Eigen::VectorXcd psi_i = psi.col(static_cast<Eigen::Index>(i));
        const Eigen::VectorXcd mu = std::sqrt(priors[i]) * (rho_inv_sqrt * psi_i);
        success += priors[i] * std::norm(mu.dot(psi_i));
    }
    return success;
}

std::vector<std::complex<double>> naive_dft(std::span<const std::complex<double>> x, int sign) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    const long double two_pi = 6.283185307179586476925286766559005768L;
    for (std::size_t k = 0; k < n; ++k) {
        long double re = 0.0L, im = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
            const long double angle = sign * two_pi * static_cast<long double>((j * k) % n) / static_cast<long double>(n);
            const long double c = std::cos(angle), s = std::sin(angle);
            re += x[j].real() * c - x[j].imag() * s;
            im += x[j].real() * s + x[j].imag() * c;
        }
        out[k] = {static_cast<double>(re), static_cast<double>(im)};
    }
    return out;
}

Eigen::MatrixXcd product_gram(std::span<const CoherentPoint> points, unsigned slots) {
    const auto m = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd single(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            const auto a = points[static_cast<std::size_t>(i)].amplitude;
            const auto b = points[static_cast<std::size_t>(j)].amplitude;
            single(i, j) = std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
        }
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Ones(1, 1);
    for (unsigned l = 0; l < slots; ++l) {
        Eigen::MatrixXcd next(g.rows() * m, g.cols() * m);
        for (Eigen::Index i = 0; i < g.rows(); ++i)
            for (Eigen::Index j = 0; j < g.cols(); ++j) next.block(i * m, j * m, m, m) = g(i, j) * single;
        g = std::move(next);
    }
    return g;
}

std::size_t joint_heterodyne_hits(std::span<const CoherentPoint> points, unsigned slots, std::size_t trials,
                                  std::uint64_t seed) {
    const std::size_t m = points.size();
    std::size_t hypotheses = 1;
    for (unsigned l = 0; l < slots; ++l) hypotheses *= m;
    RngStream rng(seed, 0);
    std::vector<std::size_t> truth(slots);
    std::vector<std::complex<double>> y(slots);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t code = 0;
        for (unsigned l = 0; l < slots; ++l) {
            truth[l] = static_cast<std::size_t>(rng.next_u32() % m);
            code = code * m + truth[l];
            const double sd = std::sqrt(0.5);
            const double re = rng.normal() * sd;
            const double im = rng.normal() * sd;
            y[l] = points[truth[l]].amplitude + std::complex<double>(re, im);
        }
        std::size_t best = 0;
        double best_ll = -std::numeric_limits<double>::infinity();
        for (std::size_t h = 0; h < hypotheses; ++h) {
            double ll = 0.0;
            std::size_t rest = h;
            for (unsigned l = slots; l-- > 0;) {
                ll -= std::norm(y[l] - points[rest % m].amplitude);
                rest /= m;
            }
            if (ll > best_ll) {
                best_ll = ll;
                best = h;
            }
        }
        hits += best == code ? 1 : 0;
    }
    return hits;
}

} // namespace y00::reference

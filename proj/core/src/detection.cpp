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

#include "y00/detection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "dft.hpp"
#include "y00/numerics.hpp"

namespace y00 {

namespace {

constexpr double kProbabilitySumTolerance = 1e-12;
constexpr double kUsdResidueTolerance = 1e-10;

using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;

/// Orthonormal coordinates of the states: columns of diag(sqrt(lambda)) V^H
/// over eigen-directions above the relative clamp.
Eigen::MatrixXcd span_coordinates(const Eigen::MatrixXcd &gram) {
    const Solver es(gram);
    if (es.info() != Eigen::Success) throw NumericalError("Gram eigendecomposition failed");
    const Eigen::VectorXd &lambda = es.eigenvalues();
    const double top = lambda.maxCoeff();
    if (top <= 0.0) throw NumericalError("Gram matrix has no positive eigenvalue");
    if (lambda.minCoeff() < -kEigenClamp * top)
        throw NumericalError("Gram matrix is not positive semidefinite within tolerance");
    std::vector<Eigen::Index> kept;
    for (Eigen::Index a = 0; a < lambda.size(); ++a) {
        if (lambda(a) > kEigenClamp * top) kept.push_back(a);
    }
    Eigen::MatrixXcd coords(static_cast<Eigen::Index>(kept.size()), gram.cols());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        const auto a = kept[r];
        coords.row(static_cast<Eigen::Index>(r)) = std::sqrt(lambda(a)) * es.eigenvectors().col(a).adjoint();
    }
    return coords;
}

double min_eigenvalue(const Eigen::MatrixXcd &h) {
    const Solver es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

// In the Fourier basis of a symmetric ensemble, Y = (c/N) diag(sqrt(gamma)) and
// p_0 rho_0 = w w^H with w_k = sqrt(gamma_k)/N. The smallest eigenvalue of
// D - w w^H is the root of the secular equation below d_min.
double fourier_residual(std::span<const double> gamma, double amplitude) {
    const double n = static_cast<double>(gamma.size());
    const double top = *std::max_element(gamma.begin(), gamma.end());
    double d_min = std::numeric_limits<double>::infinity();
    double w2_total = 0.0;
    std::vector<double> d, w2;
    for (double g : gamma) {
        if (g <= kEigenClamp * top) continue;
        d.push_back(amplitude * std::sqrt(g) / n);
        w2.push_back(g / (n * n));
        d_min = std::min(d_min, d.back());
        w2_total += w2.back();
    }
    if (d.empty()) return 0.0;
    auto secular = [&](double lambda) {
        std::vector<double> terms(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) terms[k] = w2[k] / (d[k] - lambda);
        return 1.0 - pairwise_sum(terms);
    };
    double lo = d_min - w2_total - 1.0;
    double hi = d_min;
    for (int it = 0; it < 200 && hi - lo > 1e-300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (secular(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::max(0.0, -lo);
}

} // namespace

std::string_view to_string(BoundKind kind) { return kind == BoundKind::error ? "error" : "success"; }

std::string_view to_string(BoundMethod method) {
    switch (method) {
    case BoundMethod::closed_form: return "closed_form";
    case BoundMethod::span_eigen: return "span_eigen";
    case BoundMethod::srm_fft: return "srm_fft";
    case BoundMethod::usd_dft: return "usd_dft";
    case BoundMethod::quadrature: return "quadrature";
    }
    return "unknown";
}

WeightedEnsemble::WeightedEnsemble(Constellation constellation, std::vector<Component> components)
    : constellation_(std::move(constellation)), components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("WeightedEnsemble: no components");
    double total = 0.0;
    for (const auto &c : components_) {
        if (!(c.probability >= 0.0)) throw std::invalid_argument("WeightedEnsemble: negative probability");
        if (c.index >= constellation_.size())
            throw std::invalid_argument("WeightedEnsemble: index " + std::to_string(c.index) + " out of range");
        total += c.probability;
    }
    if (std::abs(total - 1.0) > kProbabilitySumTolerance)
        throw std::invalid_argument("WeightedEnsemble: probabilities sum to " + std::to_string(total));
}

WeightedEnsemble WeightedEnsemble::uniform(Constellation constellation, std::span<const std::size_t> indices) {
    if (indices.empty()) throw std::invalid_argument("WeightedEnsemble::uniform: no indices");
    std::vector<Component> components;
    components.reserve(indices.size());
    const double q = 1.0 / static_cast<double>(indices.size());
    for (auto i : indices) components.push_back({q, i});
    return WeightedEnsemble(std::move(constellation), std::move(components));
}

BoundReport helstrom_binary_pure(const CoherentPoint &a, const CoherentPoint &b, BinaryPrior prior) {
    const double f = 4.0 * prior.p0 * prior.p1 * overlap_squared(a, b);
    // (1 - sqrt(1 - f)) / 2 rewritten to avoid cancellation for small f.
    const double pe = 0.5 * f / (1.0 + std::sqrt(std::max(0.0, 1.0 - f)));
    BoundReport r;
    r.value = clamp_probability(pe);
    r.kind = BoundKind::error;
    r.method = BoundMethod::closed_form;
    r.log_value = std::log(0.5 * 4.0 * prior.p0 * prior.p1) - std::norm(a.amplitude - b.amplitude) -
                  std::log(1.0 + std::sqrt(std::max(0.0, 1.0 - f)));
    return r;
}

BoundReport quadrature_binary(const CoherentPoint &a, const CoherentPoint &b, Quadrature mode) {
    const double sigma = std::sqrt(quadrature_variance(mode));
    const double t = std::abs(a.amplitude - b.amplitude) / (2.0 * sigma);
    BoundReport r;
    r.value = normal_tail(t);
    r.kind = BoundKind::error;
    r.method = BoundMethod::quadrature;
    r.log_value = log_normal_tail(t);
    return r;
}

double signed_trace_norm(const Eigen::MatrixXcd &gram, std::span<const double> weights) {
    if (static_cast<std::size_t>(gram.rows()) != weights.size())
        throw std::invalid_argument("signed_trace_norm: weight count does not match Gram size");
    const Eigen::MatrixXcd coords = span_coordinates(gram);
    const Eigen::Map<const Eigen::VectorXd> w(weights.data(), static_cast<Eigen::Index>(weights.size()));
    const Eigen::MatrixXcd op = coords * w.cast<std::complex<double>>().asDiagonal() * coords.adjoint();
    const Solver es(op, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

BoundReport helstrom_binary_mixed(const WeightedEnsemble &rho0, const WeightedEnsemble &rho1, BinaryPrior prior) {
    if (!(rho0.constellation() == rho1.constellation()))
        throw std::invalid_argument("helstrom_binary_mixed: ensembles reference different constellations");

    // Signed weight per occurring point of p1 rho1 - p0 rho0.
    std::map<std::size_t, double> weight;
    for (const auto &c : rho1.components()) weight[c.index] += prior.p1 * c.probability;
    for (const auto &c : rho0.components()) weight[c.index] -= prior.p0 * c.probability;

    std::vector<CoherentPoint> points;
    std::vector<double> w;
    points.reserve(weight.size());
    w.reserve(weight.size());
    for (const auto &[index, value] : weight) {
        points.push_back(rho0.constellation()[index]);
        w.push_back(value);
    }

    BoundReport r;
    r.kind = BoundKind::error;
    r.method = BoundMethod::span_eigen;
    if (std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; })) {
        r.value = 0.5;
        return r;
    }
    const double norm = signed_trace_norm(gram_matrix(points), w);
    r.value = clamp_probability(0.5 - 0.5 * norm);
    return r;
}

SrmCertificate square_root_measurement(const Eigen::MatrixXcd &gram, std::span<const double> priors) {
    const auto n = gram.rows();
    if (static_cast<std::size_t>(n) != priors.size())
        throw std::invalid_argument("square_root_measurement: prior count does not match Gram size");

    const Eigen::MatrixXcd c = span_coordinates(gram);
    const Eigen::Map<const Eigen::VectorXd> p(priors.data(), n);

    // Frame operator and its inverse square root on the span.
    const Eigen::MatrixXcd frame = c * p.cast<std::complex<double>>().asDiagonal() * c.adjoint();
    const Solver fs(frame);
    const double top = fs.eigenvalues().maxCoeff();
    Eigen::VectorXd inv_sqrt = fs.eigenvalues();
    for (Eigen::Index a = 0; a < inv_sqrt.size(); ++a)
        inv_sqrt(a) = inv_sqrt(a) > kEigenClamp * top ? 1.0 / std::sqrt(inv_sqrt(a)) : 0.0;
    const Eigen::MatrixXcd frame_inv_sqrt =
        fs.eigenvectors() * inv_sqrt.cast<std::complex<double>>().asDiagonal() * fs.eigenvectors().adjoint();

    // Measurement vectors mu_i = Phi^{-1/2} sqrt(p_i) psi_i.
    const Eigen::MatrixXcd mu =
        frame_inv_sqrt * c * p.cwiseSqrt().cast<std::complex<double>>().asDiagonal();

    Eigen::VectorXcd amp(n);
    double success = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        amp(i) = mu.col(i).dot(c.col(i));
        success += p(i) * std::norm(amp(i));
    }

    // Y = sum_i p_i Pi_i rho_i = sum_i p_i (mu_i^H psi_i) mu_i psi_i^H.
    const Eigen::VectorXcd coeff = p.cast<std::complex<double>>().cwiseProduct(amp);
    const Eigen::MatrixXcd y = mu * coeff.asDiagonal() * c.adjoint();
    double residual = (y - y.adjoint()).cwiseAbs().maxCoeff();
    const Eigen::MatrixXcd y_herm = 0.5 * (y + y.adjoint());
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::MatrixXcd gap = y_herm - p(j) * c.col(j) * c.col(j).adjoint();
        residual = std::max(residual, -min_eigenvalue(gap));
    }

    SrmCertificate cert;
    cert.success = clamp_probability(success);
    cert.residual = std::max(0.0, residual);
    cert.span_rank = static_cast<std::size_t>(c.rows());
    return cert;
}

std::vector<double> symmetric_gram_eigenvalues(std::size_t n_states, double photons) {
    const auto seq = symmetric_overlap_sequence(n_states, photons);
    const auto spectrum = detail::dft(seq, detail::DftSign::forward);
    std::vector<double> gamma(n_states);
    double top = 0.0;
    for (std::size_t k = 0; k < n_states; ++k) {
        gamma[k] = spectrum[k].real();
        top = std::max(top, gamma[k]);
    }
    for (auto &g : gamma) {
        if (g < -kEigenClamp * top)
            throw NumericalError("circulant Gram eigenvalue " + std::to_string(g) + " is negative beyond tolerance");
        g = std::max(g, 0.0);
    }
    return gamma;
}

BoundReport srm_symmetric(std::size_t n_states, double photons) {
    if (n_states < 2) throw std::invalid_argument("srm_symmetric: need at least 2 states");
    if (!(photons >= 0.0)) throw std::invalid_argument("srm_symmetric: photons must be >= 0");

    const auto gamma = symmetric_gram_eigenvalues(n_states, photons);
    const double n = static_cast<double>(n_states);
    std::vector<double> roots(gamma.size());
    std::transform(gamma.begin(), gamma.end(), roots.begin(), [](double g) { return std::sqrt(g); });
    const double amplitude = pairwise_sum(roots) / n;

    // 1 - (sum sqrt(gamma) / N)^2 = (N sum v^2 - (sum v)^2) / N^2 with
    // v_k = sqrt(gamma_k) - 1 = delta_k / (sqrt(gamma_k) + 1), where delta is the
    // spectrum without the unit diagonal. Keeps the error relative-accurate
    // when every gamma_k is close to 1.
    auto off_diagonal = symmetric_overlap_sequence(n_states, photons);
    off_diagonal[0] = 0.0;
    const auto delta = detail::dft(off_diagonal, detail::DftSign::forward);
    std::vector<double> v(n_states), v2(n_states);
    for (std::size_t k = 0; k < n_states; ++k) {
        v[k] = gamma[k] == 0.0 ? -1.0 : delta[k].real() / (roots[k] + 1.0);
        v2[k] = v[k] * v[k];
    }
    const double sum_v = pairwise_sum(v);
    // All states are vacuum at S = 0; the best guess is exact.
    const double error = photons == 0.0 ? 1.0 - 1.0 / n
                                        : clamp_probability((n * pairwise_sum(v2) - sum_v * sum_v) / (n * n));

    BoundReport r;
    r.value = error;
    r.kind = BoundKind::error;
    r.method = BoundMethod::srm_fft;
    r.log_value = std::log(r.value);
    if (n_states <= kCertifyMaxStates) {
        const auto seq = symmetric_overlap_sequence(n_states, photons);
        const auto n = static_cast<Eigen::Index>(n_states);
        Eigen::MatrixXcd g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = seq[static_cast<std::size_t>(((j - i) % n + n) % n)];
        const std::vector<double> priors(n_states, 1.0 / static_cast<double>(n_states));
        r.optimality_residual = square_root_measurement(g, priors).residual;
    } else {
        r.optimality_residual = fourier_residual(gamma, amplitude);
    }
    return r;
}

std::vector<double> usd_log_coefficients(std::size_t n_states, double photons) {
    if (n_states < 1) throw std::invalid_argument("usd_log_coefficients: need at least 1 state");
    if (!(photons >= 0.0)) throw std::invalid_argument("usd_log_coefficients: photons must be >= 0");
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    std::vector<double> acc(n_states, ninf);
    if (photons == 0.0) {
        acc[0] = 0.0;
        return acc;
    }
    // |c_k|^2 = sum over n with n + k = 0 (mod N) of Poisson(n; S). Every
    // residue class keeps all terms within the Poisson bulk plus two periods.
    const double log_s = std::log(photons);
    const auto n_max = static_cast<std::size_t>(
        std::ceil(photons + 40.0 * std::sqrt(photons) + 2.0 * static_cast<double>(n_states) + 100.0));
    for (std::size_t m = 0; m <= n_max; ++m) {
        const double md = static_cast<double>(m);
        const double lp = -photons + md * log_s - std::lgamma(md + 1.0);
        const std::size_t k = (n_states - m % n_states) % n_states;
        acc[k] = log_add(acc[k], lp);
    }
    return acc;
}

std::vector<std::complex<double>> usd_coefficients_dft(std::size_t n_states, double photons) {
    const auto seq = symmetric_overlap_sequence(n_states, photons);
    auto c = detail::dft(seq, detail::DftSign::backward);
    for (auto &v : c) v /= static_cast<double>(n_states);
    return c;
}

BoundReport usd_symmetric(std::size_t n_states, double photons) {
    if (n_states < 2) throw std::invalid_argument("usd_symmetric: need at least 2 states");
    if (!(photons >= 0.0)) throw std::invalid_argument("usd_symmetric: photons must be >= 0");

    const auto log_c = usd_log_coefficients(n_states, photons);
    const auto dft_c = usd_coefficients_dft(n_states, photons);
    for (std::size_t k = 0; k < n_states; ++k) {
        if (std::abs(dft_c[k].imag()) > kUsdResidueTolerance)
            throw NumericalError("usd_symmetric: imaginary residue " + std::to_string(dft_c[k].imag()) +
                                 " at k = " + std::to_string(k));
        if (std::abs(dft_c[k].real() - std::exp(log_c[k])) > kUsdResidueTolerance)
            throw NumericalError("usd_symmetric: DFT and Poisson-sum coefficients disagree at k = " +
                                 std::to_string(k));
    }

    const double log_min = *std::min_element(log_c.begin(), log_c.end());
    BoundReport r;
    r.log_value = std::log(static_cast<double>(n_states)) + log_min;
    r.value = clamp_probability(std::exp(*r.log_value));
    r.kind = BoundKind::success;
    r.method = BoundMethod::usd_dft;
    return r;
}

} // namespace y00

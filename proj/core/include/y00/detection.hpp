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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "y00/constellation.hpp"

namespace y00 {

/// Relative cut below which Gram / frame eigenvalues are treated as zero.
inline constexpr double kEigenClamp = 1e-10;
/// Holevo-Yuen residual above which an SRM value is not certified optimal.
inline constexpr double kResidualAlarm = 1e-8;
/// srm_symmetric builds the dense optimality certificate up to this many states.
inline constexpr std::size_t kCertifyMaxStates = 64;

struct BinaryPrior {
    double p0 = 0.5;
    double p1 = 0.5;
};

enum class BoundKind { error, success };
enum class BoundMethod { closed_form, span_eigen, srm_fft, usd_dft, quadrature };

std::string_view to_string(BoundKind kind);
std::string_view to_string(BoundMethod method);

/// A discrimination figure plus how it was obtained.
struct BoundReport {
    double value = 0.0;
    BoundKind kind = BoundKind::error;
    BoundMethod method = BoundMethod::closed_form;
    /// Max Holevo-Yuen violation of the measurement that achieves `value`.
    std::optional<double> optimality_residual;
    /// ln(value), kept when value itself may underflow.
    std::optional<double> log_value;
    double eigen_clamp = kEigenClamp;
    double residual_alarm = kResidualAlarm;

    double error_probability() const { return kind == BoundKind::error ? value : 1.0 - value; }
    double success_probability() const { return kind == BoundKind::success ? value : 1.0 - value; }
};

/// Mixed state sum_j q_j |alpha_j><alpha_j| over points of one constellation.
class WeightedEnsemble {
  public:
    struct Component {
        double probability;
        std::size_t index;
    };

    /// Throws std::invalid_argument unless probabilities are nonnegative, sum
    /// to 1 within 1e-12, and every index is in range.
    WeightedEnsemble(Constellation constellation, std::vector<Component> components);

    /// Equal weights over the listed indices.
    static WeightedEnsemble uniform(Constellation constellation, std::span<const std::size_t> indices);

    const Constellation &constellation() const { return constellation_; }
    std::span<const Component> components() const { return components_; }

  private:
    Constellation constellation_;
    std::vector<Component> components_;
};

/// Helstrom bound for two pure coherent states,
/// Pe = (1 - sqrt(1 - 4 p0 p1 |<a|b>|^2)) / 2.
BoundReport helstrom_binary_pure(const CoherentPoint &a, const CoherentPoint &b, BinaryPrior prior = {});

/// Equal-prior Gaussian receiver deciding along the line a-b:
/// Pe = Q(|a - b| / (2 sigma)).
BoundReport quadrature_binary(const CoherentPoint &a, const CoherentPoint &b, Quadrature mode);

/// Helstrom bound for two mixtures over the same constellation,
/// Pe = 1/2 - 1/2 ||p1 rho1 - p0 rho0||_1, evaluated exactly in the span of
/// the points that occur.
BoundReport helstrom_binary_mixed(const WeightedEnsemble &rho0, const WeightedEnsemble &rho1,
                                  BinaryPrior prior = {});

/// Trace norm of sum_i w_i |psi_i><psi_i| for states with Gram matrix
/// `gram`, computed in an orthonormal basis of their span.
double signed_trace_norm(const Eigen::MatrixXcd &gram, std::span<const double> weights);

/// Square-root measurement on a general pure-state ensemble.
struct SrmCertificate {
    double success = 0.0;
    /// max(||Y - Y^H||, max_j -lambda_min(Y - p_j rho_j)) with
    /// Y = sum_i p_i Pi_i rho_i; <= 0 up to rounding iff SRM is optimal.
    double residual = 0.0;
    std::size_t span_rank = 0;
};
SrmCertificate square_root_measurement(const Eigen::MatrixXcd &gram, std::span<const double> priors);

/// Eigenvalues of the circulant Gram matrix of N symmetric coherent states
/// (one length-N DFT of the overlap sequence). Small negatives are clamped;
/// anything below -kEigenClamp * max throws NumericalError.
std::vector<double> symmetric_gram_eigenvalues(std::size_t n_states, double photons);

/// Square-root measurement on N symmetric states at S photons, uniform
/// priors: success = (sum_k sqrt(gamma_k) / N)^2. Reported as an error
/// probability. The Holevo-Yuen residual is always attached: from the dense
/// span construction for N <= kCertifyMaxStates, above that from the
/// diagonal Fourier-basis form of the same conditions.
BoundReport srm_symmetric(std::size_t n_states, double photons);

/// ln |c_k|^2 for k = 0..N-1, where
/// |c_k|^2 = (1/N) sum_j exp(2 pi i jk/N) exp(S (exp(2 pi i j/N) - 1)).
/// Each coefficient is an aliased Poisson tail sum, accumulated in log form so
/// values far below double precision relative to the largest stay exact.
std::vector<double> usd_log_coefficients(std::size_t n_states, double photons);

/// The same coefficients straight from one DFT (absolute accuracy ~1e-16).
std::vector<std::complex<double>> usd_coefficients_dft(std::size_t n_states, double photons);

/// Optimal unambiguous discrimination of N symmetric coherent states:
/// P_D = N min_k |c_k|^2, reported as a success probability with log_value.
/// Throws NumericalError if the DFT route leaves imaginary residues above
/// 1e-10 or disagrees with the log-domain route by more than 1e-10.
BoundReport usd_symmetric(std::size_t n_states, double photons);

} // namespace y00

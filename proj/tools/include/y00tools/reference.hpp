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

// Slow, independent reference computations. Nothing here shares code with the
// span/DFT machinery in y00::core; it exists to check that machinery.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "y00/constellation.hpp"

namespace y00::reference {

/// Truncated number-basis vector of |alpha>, dimension chosen so the dropped
/// Poisson tail is below 1e-30.
Eigen::VectorXcd fock_vector(std::complex<double> alpha, std::size_t dimension);
std::size_t fock_dimension(std::span<const CoherentPoint> points);

/// 1/2 - 1/2 ||p1 rho1 - p0 rho0||_1 with the operator built densely in the
/// number basis, then restricted to an explicitly Gram-Schmidt orthonormalized
/// basis of the occurring states before the eigen solve.
double helstrom_mixed_dense(std::span<const CoherentPoint> points, std::span<const double> weights0,
                            std::span<const double> weights1, double p0, double p1);

/// SRM success from number-basis vectors: mu_i = rho^{-1/2} sqrt(p_i) psi_i.
double srm_success_dense(std::span<const CoherentPoint> points, std::span<const double> priors);

/// O(N^2) DFT in long double. sign = -1 forward, +1 backward; unnormalized.
std::vector<std::complex<double>> naive_dft(std::span<const std::complex<double>> x, int sign);

/// Gram matrix of all M^L product states of a single-slot constellation.
Eigen::MatrixXcd product_gram(std::span<const CoherentPoint> points, unsigned slots);

/// Monte Carlo over L slots: each slot carries one of `points` uniformly,
/// Eve heterodynes every slot and picks the joint ML product hypothesis.
/// Returns the number of trials with every slot right.
std::size_t joint_heterodyne_hits(std::span<const CoherentPoint> points, unsigned slots, std::size_t trials,
                                  std::uint64_t seed);

} // namespace y00::reference

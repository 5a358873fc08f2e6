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
#include <span>
#include <stdexcept>
#include <string>

namespace y00 {

/// Raised when a computation loses the precision it needs (e.g. a circulant
/// eigenvalue that is negative well beyond rounding).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

/// Upper tail of the standard normal distribution, Q(x) = P(Z > x).
double normal_tail(double x);

/// ln Q(x), finite for arbitrarily large x.
double log_normal_tail(double x);

/// Binary entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double p);

/// ln(e^a + e^b) without overflow; either argument may be -inf.
double log_add(double a, double b);

/// Deterministic pairwise (tree) summation. The result depends only on the
/// input order, never on how the caller partitioned work.
double pairwise_sum(std::span<const double> values);

/// ln(sum_i e^{x_i}) with the exponentials reduced by pairwise_sum.
/// Returns -inf for an empty span or all -inf inputs.
double log_sum_exp(std::span<const double> log_values);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

} // namespace y00

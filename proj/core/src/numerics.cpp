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

#include "y00/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace y00 {

namespace {

constexpr std::size_t kPairwiseBlock = 8;

double pairwise_sum_impl(const double *data, std::size_t n) {
    if (n <= kPairwiseBlock) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, n - half);
}

} // namespace

double normal_tail(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double log_normal_tail(double x) {
    if (x < 30.0) return std::log(normal_tail(x));
    // Asymptotic series; relative error below 1e-12 for x >= 30.
    const double inv2 = 1.0 / (x * x);
    const double series = 1.0 - inv2 + 3.0 * inv2 * inv2 - 15.0 * inv2 * inv2 * inv2;
    return -0.5 * x * x - std::log(x * std::sqrt(2.0 * kPi)) + std::log(series);
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double log_add(double a, double b) {
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    if (a == ninf) return b;
    if (b == ninf) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values.data(), values.size());
}

double log_sum_exp(std::span<const double> log_values) {
    constexpr double ninf = -std::numeric_limits<double>::infinity();
    if (log_values.empty()) return ninf;
    const double peak = *std::max_element(log_values.begin(), log_values.end());
    if (peak == ninf) return ninf;
    if (std::isinf(peak)) return peak;
    std::vector<double> scaled(log_values.size());
    std::transform(log_values.begin(), log_values.end(), scaled.begin(),
                   [peak](double v) { return std::exp(v - peak); });
    return peak + std::log(pairwise_sum(scaled));
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace y00

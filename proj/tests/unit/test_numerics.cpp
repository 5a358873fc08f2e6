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

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "y00/numerics.hpp"

namespace y00 {
namespace {

TEST(NormalTail, KnownValues) {
    EXPECT_NEAR(normal_tail(0.0), 0.5, 1e-16);
    EXPECT_NEAR(normal_tail(2.0), 0.02275013194817921, 1e-16);
    EXPECT_NEAR(normal_tail(0.5), 0.3085375387259869, 1e-16);
    EXPECT_NEAR(normal_tail(0.5244005127080409), 0.3, 1e-15);
    EXPECT_NEAR(normal_tail(0.2533471031357997), 0.4, 1e-15);
}

TEST(NormalTail, SymmetricAroundZero) {
    for (double x : {0.1, 0.7, 1.9, 3.3}) EXPECT_NEAR(normal_tail(-x) + normal_tail(x), 1.0, 1e-15);
}

TEST(NormalTail, LogFormFarTail) {
    // ln Q(40) at 60 digits.
    EXPECT_NEAR(log_normal_tail(40.0), -804.6084420137538, 1e-10);
    EXPECT_NEAR(log_normal_tail(2.0), std::log(0.02275013194817921), 1e-14);
    // Continuity at the switch between direct and asymptotic evaluation.
    EXPECT_NEAR(log_normal_tail(29.999999), log_normal_tail(30.000001), 1e-4);
    EXPECT_TRUE(std::isfinite(log_normal_tail(1e4)));
}

TEST(BinaryEntropy, Values) {
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.11), 0.499915958164528, 1e-14);
    EXPECT_NEAR(binary_entropy(3.3e-4), 0.004292542097281792, 1e-15);
}

TEST(LogSum, MatchesDirect) {
    const std::vector<double> v = {std::log(0.1), std::log(0.2), std::log(0.7)};
    EXPECT_NEAR(log_sum_exp(v), 0.0, 1e-15);
    EXPECT_NEAR(log_add(std::log(2.0), std::log(3.0)), std::log(5.0), 1e-15);
    const double ninf = -std::numeric_limits<double>::infinity();
    EXPECT_EQ(log_add(ninf, 1.5), 1.5);
    const std::vector<double> tiny = {-1e5, -1e5};
    EXPECT_NEAR(log_sum_exp(tiny), -1e5 + std::log(2.0), 1e-9);
}

TEST(PairwiseSum, ExactOnIntegersAndOrderStable) {
    std::vector<double> v(1000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i + 1);
    EXPECT_EQ(pairwise_sum(v), 500500.0);
    EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(LeastSquares, RecoversLine) {
    const std::vector<double> x = {1, 2, 3, 4, 5};
    std::vector<double> y;
    for (double xi : x) y.push_back(-4.0 * xi + 7.0);
    EXPECT_NEAR(least_squares_slope(x, y), -4.0, 1e-14);
}

} // namespace
} // namespace y00

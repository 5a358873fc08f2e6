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
#include <complex>
#include <stdexcept>

#include <gtest/gtest.h>

#include "y00/constellation.hpp"
#include "y00/numerics.hpp"

namespace y00 {
namespace {

TEST(Psk, PointsOnCircleWithExactAntipodes) {
    const auto c = make_psk(8, 9.0);
    ASSERT_EQ(c.size(), 16u);
    EXPECT_EQ(c.num_bases(), 8u);
    EXPECT_EQ(c.kind(), Modulation::psk);
    for (std::size_t s = 0; s < c.size(); ++s) {
        EXPECT_NEAR(c[s].photons(), 9.0, 1e-12);
        const auto expected = std::polar(3.0, kPi * static_cast<double>(s) / 8.0);
        EXPECT_NEAR(std::abs(c[s].amplitude - expected), 0.0, 1e-12);
    }
    for (std::size_t s = 0; s < 8; ++s) EXPECT_EQ(c[s + 8].amplitude, -c[s].amplitude);
}

TEST(Psk, SingleBasisIsAntipodalPair) {
    const auto c = make_psk(1, 4.0);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].amplitude, std::complex<double>(2.0, 0.0));
    EXPECT_EQ(c[1].amplitude, std::complex<double>(-2.0, 0.0));
    EXPECT_NEAR(c.neighbor_distance(), 4.0, 1e-15);
}

TEST(Psk, DesignSpacingIsArcLength) {
    const auto c = make_psk(16, 100.0);
    EXPECT_NEAR(c.design_spacing(), 2.0 * kPi * 10.0 / 32.0, 1e-14);
    EXPECT_NEAR(c.neighbor_distance(), 2.0 * 10.0 * std::sin(kPi / 32.0), 1e-13);
}

TEST(Ask, InclusiveEquallySpacedAmplitudes) {
    const auto c = make_ask(1, 4.0, 16.0, 1.0);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_NEAR(c[0].amplitude.real(), 2.0, 1e-15);
    EXPECT_NEAR(c[1].amplitude.real(), 4.0, 1e-15);
    const auto d = make_ask(2, 4.0, 25.0, 1.0);
    ASSERT_EQ(d.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(d[i].amplitude.real(), 2.0 + static_cast<double>(i), 1e-14);
    EXPECT_NEAR(d.neighbor_distance(), 1.0, 1e-14);
    EXPECT_NEAR(d.design_spacing(), 3.0 / 4.0, 1e-15);
}

TEST(Ask, RejectsBadParameters) {
    EXPECT_THROW(make_ask(2, 1.0, 16.0, 1.0), std::invalid_argument);  // S_min <= 1/kappa
    EXPECT_THROW(make_ask(2, 4.0, 16.0, 0.2), std::invalid_argument);  // 4 <= 1/0.2
    EXPECT_THROW(make_ask(2, 4.0, 16.0, 1.5), std::invalid_argument);  // kappa > 1
    EXPECT_THROW(make_ask(2, 9.0, 9.0, 1.0), std::invalid_argument);   // S_max <= S_min
}

TEST(Attenuation, ScalesAmplitudes) {
    const auto c = make_psk(4, 16.0).attenuated(0.25);
    for (const auto &p : c.points()) EXPECT_NEAR(p.photons(), 4.0, 1e-12);
    EXPECT_THROW((void)make_psk(4, 16.0).attenuated(0.0), std::invalid_argument);
}

TEST(Overlap, ClosedForm) {
    const CoherentPoint a{{1.0, 0.5}}, b{{-0.3, 2.0}};
    EXPECT_NEAR(overlap_squared(a, b), std::exp(-std::norm(a.amplitude - b.amplitude)), 1e-15);
    const auto ov = overlap(a, b);
    const auto expected = std::exp(-0.5 * std::norm(a.amplitude) - 0.5 * std::norm(b.amplitude) +
                                   std::conj(a.amplitude) * b.amplitude);
    EXPECT_NEAR(std::abs(ov - expected), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(overlap(a, a) - 1.0), 0.0, 1e-15);
}

TEST(Gram, CirculantMatchesElementwise) {
    for (double s : {0.3, 2.0, 50.0}) {
        const auto c = make_psk(4, s);
        const auto fast = gram_matrix(c);
        const auto slow = gram_matrix(c.points());
        EXPECT_LT((fast - slow).cwiseAbs().maxCoeff(), 1e-13) << "S=" << s;
        EXPECT_LT((fast - fast.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Gram, OverlapSequenceUnderflowsCleanly) {
    const auto seq = symmetric_overlap_sequence(2047, 1e4);
    EXPECT_EQ(seq[0], std::complex<double>(1.0, 0.0));
    EXPECT_EQ(std::abs(seq[1023]), 0.0);  // |log| = 2e4 far below the double range
    // Small angle: log magnitude -2 S sin^2(pi/2047).
    EXPECT_NEAR(std::log(std::abs(seq[1])), -2.0 * 1e4 * std::pow(std::sin(kPi / 2047.0), 2), 1e-12);
}

TEST(NeighborError, ChordFormula) {
    EXPECT_NEAR(neighbor_error_from_distance(2.0), 0.02275013194817921, 1e-16);
    const auto c = make_psk(60, 100.0);
    EXPECT_NEAR(neighbor_error(c), normal_tail(20.0 * std::sin(kPi / 120.0)), 1e-15);
}

TEST(DesignBases, SmallestMeetingTarget) {
    const DesignRequest req{Modulation::psk, 100.0};
    const unsigned m = design_bases(0.3, req);
    EXPECT_EQ(m, 60u);
    EXPECT_GE(neighbor_error(make_psk(m, 100.0)), 0.3);
    EXPECT_LT(neighbor_error(make_psk(m - 1, 100.0)), 0.3);
}

TEST(DesignBases, QuadruplingPhotonsDoublesBases) {
    for (double s : {100.0, 1e3, 1e4}) {
        const auto m1 = design_bases(0.3, {Modulation::psk, s});
        const auto m4 = design_bases(0.3, {Modulation::psk, 4.0 * s});
        EXPECT_LE(std::abs(static_cast<int>(m4) - 2 * static_cast<int>(m1)), 1) << "S=" << s;
    }
}

TEST(DesignBases, MonotoneInTargetAndPhotons) {
    unsigned last = 0;
    for (double target : {0.2, 0.25, 0.3, 0.35, 0.4, 0.45}) {
        const auto m = design_bases(target, {Modulation::psk, 1000.0});
        EXPECT_GE(m, last);
        last = m;
    }
    EXPECT_LE(design_bases(0.3, {Modulation::psk, 100.0}), design_bases(0.3, {Modulation::psk, 200.0}));
}

TEST(DesignBases, TrivialAndInvalid) {
    EXPECT_EQ(design_bases(0.3, {Modulation::psk, 0.01}), 1u);
    EXPECT_THROW(design_bases(0.1, {Modulation::psk, 100.0}), std::invalid_argument);
    EXPECT_THROW(design_bases(0.5, {Modulation::psk, 100.0}), std::invalid_argument);
}

TEST(DesignBases, Ask) {
    DesignRequest req{Modulation::ask, 400.0, 4.0, 1.0};
    const unsigned m = design_bases(0.3, req);
    EXPECT_GE(neighbor_error(make_ask(m, 4.0, 400.0, 1.0)), 0.3);
    EXPECT_LT(neighbor_error(make_ask(m - 1, 4.0, 400.0, 1.0)), 0.3);
}

TEST(DesignPhotons, InvertsNeighborError) {
    for (unsigned m : {8u, 64u, 512u}) {
        for (double target : {0.3, 0.4}) {
            const double s = design_photons(m, target);
            EXPECT_GE(neighbor_error(make_psk(m, s)), target);
            EXPECT_LT(neighbor_error(make_psk(m, s * (1.0 + 1e-9))), target);
        }
    }
    // Closed form: d = isf(0.3) = 0.5244005127080409.
    EXPECT_NEAR(design_photons(512, 0.3), std::pow(0.5244005127080409 / (2.0 * std::sin(kPi / 1024.0)), 2), 1e-6);
}

} // namespace
} // namespace y00

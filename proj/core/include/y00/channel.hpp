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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "y00/cipher.hpp"
#include "y00/constellation.hpp"
#include "y00/rng.hpp"

namespace y00 {

using Amplitudes = std::vector<std::complex<double>>;

/// Observed rate with its binomial standard error sqrt(p(1-p)/n).
struct EmpiricalRate {
    double rate = 0.0;
    double standard_error = 0.0;
    std::size_t count = 0;

    static EmpiricalRate from_counts(std::size_t hits, std::size_t trials);
};

/// Gaussian measurement outcomes, one per transmitted slot. Heterodyne samples
/// are complex; a homodyne sample x along unit axis u is stored as x * u.
struct MeasurementRecord {
    std::vector<std::complex<double>> samples;
    Quadrature mode = Quadrature::heterodyne;
    double transmissivity = 1.0;
    std::uint64_t seed = 0;
};

Amplitudes amplitudes_of(const StateSequence &sequence, const Constellation &constellation);

/// Pure-loss channel: alpha -> sqrt(kappa) alpha. Coherent states stay pure.
Amplitudes apply_loss(std::span<const std::complex<double>> amplitudes, double transmissivity);

/// amplitude + complex Gaussian noise with per-quadrature variance 1/2.
std::complex<double> heterodyne_sample(std::complex<double> amplitude, RngStream &rng);

/// Projection of amplitude on unit `axis` plus Gaussian noise of variance 1/4.
double homodyne_sample(std::complex<double> amplitude, std::complex<double> axis, RngStream &rng);

/// Eve's unkeyed heterodyne record of the transmitted amplitudes after a loss
/// of `transmissivity`. Slot t draws from stream (seed, eve_record, t).
MeasurementRecord heterodyne_record(std::span<const std::complex<double>> transmitted, double transmissivity,
                                    std::uint64_t seed, unsigned threads = 1);

/// Bob's keyed homodyne record: in slot t he measures along the line joining
/// the two states of basis k_t, after the config's channel loss.
MeasurementRecord bob_homodyne_record(std::span<const std::complex<double>> transmitted, const CipherConfig &config,
                                      const SeedKey &seed_key, std::uint64_t seed, unsigned threads = 1);

struct BobResult {
    Bits bits;
    /// Present when a reference plaintext was supplied.
    std::optional<EmpiricalRate> bit_error_rate;
};

/// Keyed binary decision per slot: threshold the projection at the midpoint
/// of the basis pair, then undo the OSK polarity.
BobResult bob_receive(const MeasurementRecord &record, const CipherConfig &config, const SeedKey &seed_key,
                      std::span<const std::uint8_t> plaintext = {});

/// Same decision rule applied to noiseless received amplitudes.
BobResult bob_receive_noiseless(std::span<const std::complex<double>> received, const CipherConfig &config,
                                const SeedKey &seed_key, std::span<const std::uint8_t> plaintext = {});

} // namespace y00

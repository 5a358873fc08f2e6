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

#include "y00/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "y00/parallel.hpp"

namespace y00 {

namespace {

void check_transmissivity(double kappa) {
    if (!(kappa > 0.0 && kappa <= 1.0)) throw std::invalid_argument("transmissivity must be in (0, 1]");
}

struct BasisAxis {
    std::complex<double> axis;
    double threshold;
};

BasisAxis basis_axis(const Constellation &received, std::uint32_t symbol) {
    const auto a = received[symbol].amplitude;
    const auto b = received[symbol + received.num_bases()].amplitude;
    const double gap = std::abs(b - a);
    const std::complex<double> u = gap > 0.0 ? (b - a) / gap : std::complex<double>(1.0, 0.0);
    return {u, std::real(std::conj(u) * 0.5 * (a + b))};
}

BobResult decide(std::span<const std::complex<double>> observations, const Constellation &received,
                 const CipherConfig &config, const SeedKey &seed_key, std::span<const std::uint8_t> plaintext) {
    if (!plaintext.empty() && plaintext.size() != observations.size())
        throw std::invalid_argument("bob_receive: plaintext length does not match record length");
    KeySchedule schedule(config, seed_key);
    BobResult result;
    result.bits.resize(observations.size());
    std::size_t errors = 0;
    for (std::size_t t = 0; t < observations.size(); ++t) {
        const KeyedSlot slot = schedule.next();
        const BasisAxis ax = basis_axis(received, slot.symbol);
        const bool raw = std::real(std::conj(ax.axis) * observations[t]) > ax.threshold;
        result.bits[t] = (raw != slot.polarity) ? 1 : 0;
        if (!plaintext.empty() && result.bits[t] != (plaintext[t] != 0 ? 1 : 0)) ++errors;
    }
    if (!plaintext.empty()) result.bit_error_rate = EmpiricalRate::from_counts(errors, observations.size());
    return result;
}

} // namespace

EmpiricalRate EmpiricalRate::from_counts(std::size_t hits, std::size_t trials) {
    EmpiricalRate r;
    r.count = trials;
    if (trials == 0) return r;
    r.rate = static_cast<double>(hits) / static_cast<double>(trials);
    r.standard_error = std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(trials));
    return r;
}

Amplitudes amplitudes_of(const StateSequence &sequence, const Constellation &constellation) {
    Amplitudes out;
    out.reserve(sequence.indices.size());
    for (auto s : sequence.indices) {
        if (s >= constellation.size()) throw std::out_of_range("amplitudes_of: index out of range");
        out.push_back(constellation[s].amplitude);
    }
    return out;
}

Amplitudes apply_loss(std::span<const std::complex<double>> amplitudes, double transmissivity) {
    check_transmissivity(transmissivity);
    const double scale = std::sqrt(transmissivity);
    Amplitudes out(amplitudes.begin(), amplitudes.end());
    if (transmissivity != 1.0) {
        for (auto &a : out) a *= scale;
    }
    return out;
}

std::complex<double> heterodyne_sample(std::complex<double> amplitude, RngStream &rng) {
    const double sigma = std::sqrt(quadrature_variance(Quadrature::heterodyne));
    const double re = rng.normal();
    const double im = rng.normal();
    return amplitude + sigma * std::complex<double>(re, im);
}

double homodyne_sample(std::complex<double> amplitude, std::complex<double> axis, RngStream &rng) {
    const double sigma = std::sqrt(quadrature_variance(Quadrature::homodyne));
    return std::real(std::conj(axis) * amplitude) + sigma * rng.normal();
}

MeasurementRecord heterodyne_record(std::span<const std::complex<double>> transmitted, double transmissivity,
                                    std::uint64_t seed, unsigned threads) {
    const Amplitudes received = apply_loss(transmitted, transmissivity);
    MeasurementRecord record;
    record.mode = Quadrature::heterodyne;
    record.transmissivity = transmissivity;
    record.seed = seed;
    record.samples.resize(received.size());
    parallel_for(received.size(), threads, [&](std::size_t t) {
        RngStream rng(seed, stream_id(StreamPurpose::eve_record, t));
        record.samples[t] = heterodyne_sample(received[t], rng);
    });
    return record;
}

MeasurementRecord bob_homodyne_record(std::span<const std::complex<double>> transmitted, const CipherConfig &config,
                                      const SeedKey &seed_key, std::uint64_t seed, unsigned threads) {
    config.validate();
    const Amplitudes received = apply_loss(transmitted, config.transmissivity);
    const Constellation reference = config.constellation().attenuated(config.transmissivity);

    // The key schedule is sequential; axes are resolved first, sampling after.
    std::vector<std::complex<double>> axes(received.size());
    KeySchedule schedule(config, seed_key);
    for (auto &ax : axes) ax = basis_axis(reference, schedule.next().symbol).axis;

    MeasurementRecord record;
    record.mode = Quadrature::homodyne;
    record.transmissivity = config.transmissivity;
    record.seed = seed;
    record.samples.resize(received.size());
    parallel_for(received.size(), threads, [&](std::size_t t) {
        RngStream rng(seed, stream_id(StreamPurpose::bob_record, t));
        record.samples[t] = homodyne_sample(received[t], axes[t], rng) * axes[t];
    });
    return record;
}

BobResult bob_receive(const MeasurementRecord &record, const CipherConfig &config, const SeedKey &seed_key,
                      std::span<const std::uint8_t> plaintext) {
    config.validate();
    const Constellation reference = config.constellation().attenuated(record.transmissivity);
    return decide(record.samples, reference, config, seed_key, plaintext);
}

BobResult bob_receive_noiseless(std::span<const std::complex<double>> received, const CipherConfig &config,
                                const SeedKey &seed_key, std::span<const std::uint8_t> plaintext) {
    config.validate();
    const Constellation reference = config.constellation().attenuated(config.transmissivity);
    return decide(received, reference, config, seed_key, plaintext);
}

} // namespace y00

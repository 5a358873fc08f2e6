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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "y00/channel.hpp"
#include "y00/cipher.hpp"
#include "y00/detection.hpp"

namespace y00 {

enum class AttackKind { ctoa_data, ctoa_key, kpa_key, collective, repetition };
std::string_view to_string(AttackKind kind);

/// What Eve attacks when estimating the running key.
enum class KeyTarget {
    /// Data bits known: M candidate states per slot (2M with OSK).
    known_plaintext,
    /// Nothing known: all 2M states.
    ciphertext_only,
};

struct AttackReport {
    AttackKind kind = AttackKind::ctoa_data;
    unsigned num_bases = 0;
    double photons = 0.0;
    double transmissivity = 1.0;
    BinaryPrior prior;
    EmpiricalRate empirical;
    BoundReport bound;
    std::optional<double> key_posterior_entropy_bits;
    std::optional<double> log2_key_posterior_entropy_bits;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// Ciphertext-only attack on data. Eve knows the protocol but not the key, so
/// bit b is the uniform mixture over every index the encoder could emit for b.
/// Per slot she takes the MAP decision over the two Gaussian-mixture
/// likelihoods of her heterodyne sample; exact ties are broken by a keyed coin
/// from the record seed. The bound is helstrom_binary_mixed over the same two
/// mixtures at the record's transmissivity.
AttackReport eve_ctoa_data(const MeasurementRecord &record, const CipherConfig &config,
                           std::span<const std::uint8_t> truth, unsigned threads = 1);

/// Running-key estimation from a heterodyne record: nearest candidate state
/// per slot, scored against the true key. The bound is srm_symmetric at
/// N = M (known plaintext, no OSK) or N = 2M otherwise; PSK only.
AttackReport eve_kpa_key_symbol(const MeasurementRecord &record, const CipherConfig &config, const SeedKey &truth_key,
                                std::span<const std::uint8_t> plaintext, KeyTarget target = KeyTarget::known_plaintext,
                                unsigned threads = 1);

struct KeyPosterior {
    /// Shannon entropy of the seed posterior; may underflow to 0.
    double entropy_bits = 0.0;
    /// log2 of entropy_bits, finite whenever the entropy is positive.
    double log2_entropy_bits = 0.0;
    std::size_t candidates = 0;
    std::uint64_t map_seed = 0;
    double map_log2_probability = 0.0;
};

/// Entropy of the posterior proportional to exp(log_likelihoods) under a
/// uniform prior, accumulated entirely in log form.
KeyPosterior posterior_entropy(std::span<const double> log_likelihoods);

/// Exhaustive seed posterior for a known-plaintext heterodyne record: every
/// nonzero |K|-bit seed is scored by the exact Gaussian log-likelihood of the
/// whole record. The OSK polarity is keyed, so it is a deterministic function
/// of each candidate seed; the measurement noise is the only unkeyed
/// randomness. Requires key_bits <= 20.
KeyPosterior key_posterior_entropy(const MeasurementRecord &record, const CipherConfig &config,
                                   std::span<const std::uint8_t> plaintext, unsigned threads = 1);

inline constexpr unsigned kMaxExhaustiveKeyBits = 20;

struct Equivocation {
    double bits = 0.0;
    bool exceeds_shannon = false;
};

/// n h(pe) bits of data equivocation against the |K|-bit Shannon limit.
Equivocation data_equivocation(double pe_eve, std::size_t n_bits, unsigned key_bits);

struct LogProbability {
    double log2 = 0.0;
    double value = 0.0;
};

/// pd^L for L individually measured slots; L may be fractional (|K| / log2 M).
LogProbability collective_success(double per_slot_pd, double slots);

/// 1 - (1 - pd)^J.
double repetition_success(double pd, double trials);

struct CollectiveUsd {
    BoundReport per_slot;
    double slots = 0.0;
    double log2_probability = 0.0;
    bool below_guessing = false;
};

/// L log2 P_D(USD) with L = |K| / log2 N, compared with the -|K| guessing level.
CollectiveUsd collective_usd_bound(std::size_t n_states, double photons, unsigned key_bits);

/// h(pe_eve) > h(pe_bob), both in [0, 1/2].
bool keygen_advantage(double pe_bob, double pe_eve);

} // namespace y00

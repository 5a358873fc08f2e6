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
#include <vector>

#include "y00/constellation.hpp"

namespace y00 {

using Bits = std::vector<std::uint8_t>;

/// Shared secret seed, |K| bits. Bit i lives in word i / 64, position i % 64.
class SeedKey {
  public:
    SeedKey(unsigned bits, std::vector<std::uint64_t> words);
    /// Low `bits` bits of `value`; bits <= 64.
    static SeedKey from_value(unsigned bits, std::uint64_t value);
    /// Little-endian bit order: bit i is (bytes[i / 8] >> (i % 8)) & 1.
    static SeedKey from_bytes(unsigned bits, std::span<const std::uint8_t> bytes);

    unsigned bits() const { return bits_; }
    std::span<const std::uint64_t> words() const { return words_; }
    bool bit(unsigned i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    bool is_zero() const;
    std::vector<std::uint8_t> to_bytes() const;

    bool operator==(const SeedKey &) const = default;

  private:
    unsigned bits_;
    std::vector<std::uint64_t> words_;
};

/// Feedback polynomial x^K + sum x^e, given by its exponents (K included).
class TapPolynomial {
  public:
    TapPolynomial() = default;
    /// Throws unless the exponent set has a nonzero feedback part below the
    /// degree.
    explicit TapPolynomial(std::vector<unsigned> exponents);

    unsigned degree() const { return exponents_.empty() ? 0 : exponents_.front(); }
    /// Descending, duplicates removed.
    std::span<const unsigned> exponents() const { return exponents_; }
    bool empty() const { return exponents_.empty(); }

    bool operator==(const TapPolynomial &) const = default;

  private:
    std::vector<unsigned> exponents_;
};

/// Shipped primitive polynomials (variant 0 and 1 are distinct) for degrees
/// 4..64, 96, 100, 127 and 128.
std::optional<TapPolynomial> maximal_taps(unsigned degree, unsigned variant = 0);

/// Fibonacci LFSR. Output is state bit 0; the register shifts toward bit 0
/// and the parity of the tapped bits enters at bit K-1, so the output obeys
/// s[n+K] = sum_{e < K} s[n+e] for the polynomial's exponents e.
class Lfsr {
  public:
    Lfsr(const SeedKey &seed, const TapPolynomial &taps);

    bool next();
    std::span<const std::uint64_t> state() const { return state_; }
    unsigned length() const { return length_; }

  private:
    unsigned length_;
    std::vector<std::uint64_t> state_;
    std::vector<std::uint64_t> mask_;
};

/// First `count` output bits.
Bits lfsr_stream(const SeedKey &seed, const TapPolynomial &taps, std::size_t count);

struct CipherConfig {
    /// M; encoding needs a power of two.
    unsigned num_bases = 2;
    /// Photons per pulse (PSK) or S_max (ASK).
    double photons = 100.0;
    /// ASK only.
    double photons_min = 0.0;
    unsigned key_bits = 12;
    TapPolynomial taps;
    /// Drives the keyed polarity stream when osk is set.
    TapPolynomial osk_taps;
    bool osk = false;
    Modulation kind = Modulation::psk;
    double transmissivity = 1.0;

    /// Config with the shipped maximal taps for key_bits.
    static CipherConfig with_defaults(unsigned num_bases, double photons, unsigned key_bits);

    /// Throws std::invalid_argument describing the first violated rule.
    void validate() const;
    /// log2(M).
    unsigned bits_per_symbol() const;
    /// Transmitter constellation (before channel loss).
    Constellation constellation() const;
    /// Running-key symbols per LFSR period, floor((2^K - 1) / log2 M); 0 if
    /// the period is too long to represent.
    std::uint64_t symbols_per_period() const;

    bool operator==(const CipherConfig &) const = default;
};

/// Running key K'/log2(M) = (k_1, k_2, ...).
struct RunningKey {
    std::vector<std::uint32_t> symbols;
};

/// Indices into the 2M-point constellation, one per transmitted bit.
struct StateSequence {
    std::vector<std::uint32_t> indices;
};

/// One slot's keyed values: the basis symbol k_t and the OSK polarity r_t.
struct KeyedSlot {
    std::uint32_t symbol = 0;
    bool polarity = false;
};

/// Keyed per-slot schedule. Symbols are log2(M)-bit big-endian blocks of the
/// main LFSR; the last partial block of every 2^K - 1 bit period is dropped.
/// The polarity comes from a second LFSR over the same seed with osk_taps.
class KeySchedule {
  public:
    KeySchedule(const CipherConfig &config, const SeedKey &seed);
    KeyedSlot next();

  private:
    Lfsr main_;
    std::optional<Lfsr> osk_;
    unsigned bits_per_symbol_;
    std::uint64_t period_bits_ = 0;
    std::uint64_t usable_bits_ = 0;
    std::uint64_t position_ = 0;
};

RunningKey running_key(const CipherConfig &config, const SeedKey &seed, std::size_t count);

/// Stateful transmitter: index = (k + (x xor r) M) mod 2M.
class Encoder {
  public:
    Encoder(const CipherConfig &config, const SeedKey &seed);
    std::uint32_t push(bool bit);

  private:
    std::uint32_t num_bases_;
    KeySchedule schedule_;
};

/// Stateful keyed receiver for noiseless indices: x = ((s - k) mod 2M) / M xor r.
class Decoder {
  public:
    Decoder(const CipherConfig &config, const SeedKey &seed);
    /// Throws std::out_of_range for an index >= 2M.
    bool push(std::uint32_t index);

  private:
    std::uint32_t num_bases_;
    KeySchedule schedule_;
};

StateSequence encode(std::span<const std::uint8_t> plaintext, const CipherConfig &config, const SeedKey &seed);
Bits decode(const StateSequence &sequence, const CipherConfig &config, const SeedKey &seed);

/// log2 F with F = (2M)^(2^|K| / log2 M), the number of possible state
/// sequences over one key period.
double sequence_count_log2(const CipherConfig &config);

/// Uniform nonzero seed drawn from the key_material stream of `seed`.
SeedKey derive_seed_key(unsigned bits, std::uint64_t seed);

/// Uniform plaintext bits drawn from the plaintext stream of `seed`.
Bits random_plaintext(std::size_t count, std::uint64_t seed);

} // namespace y00

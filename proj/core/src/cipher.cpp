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

#include "y00/cipher.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "y00/rng.hpp"

namespace y00 {

namespace {

std::size_t word_count(unsigned bits) { return (bits + 63) / 64; }

bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

constexpr unsigned kMaxTrackedPeriodBits = 62;
constexpr unsigned kMaxEncodedBases = 1u << 15;

const CipherConfig &validated(const CipherConfig &config) {
    config.validate();
    return config;
}

} // namespace

// --- SeedKey ---------------------------------------------------------------

SeedKey::SeedKey(unsigned bits, std::vector<std::uint64_t> words) : bits_(bits), words_(std::move(words)) {
    if (bits_ == 0) throw std::invalid_argument("SeedKey: zero length");
    words_.resize(word_count(bits_), 0);
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
}

SeedKey SeedKey::from_value(unsigned bits, std::uint64_t value) {
    if (bits > 64) throw std::invalid_argument("SeedKey::from_value: more than 64 bits");
    return SeedKey(bits, {value});
}

SeedKey SeedKey::from_bytes(unsigned bits, std::span<const std::uint8_t> bytes) {
    if (bytes.size() < (bits + 7) / 8) throw std::invalid_argument("SeedKey::from_bytes: too few bytes");
    std::vector<std::uint64_t> words(word_count(bits), 0);
    for (unsigned i = 0; i < bits; ++i) {
        if ((bytes[i / 8] >> (i % 8)) & 1u) words[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return SeedKey(bits, std::move(words));
}

bool SeedKey::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::uint8_t> SeedKey::to_bytes() const {
    std::vector<std::uint8_t> out((bits_ + 7) / 8, 0);
    for (unsigned i = 0; i < bits_; ++i) {
        if (bit(i)) out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    return out;
}

// --- TapPolynomial / Lfsr ---------------------------------------------------

TapPolynomial::TapPolynomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
    std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
    exponents_.erase(std::unique(exponents_.begin(), exponents_.end()), exponents_.end());
    if (exponents_.size() < 2 || exponents_.front() == 0)
        throw std::invalid_argument("TapPolynomial: need a degree >= 1 and a nonzero feedback term");
}

Lfsr::Lfsr(const SeedKey &seed, const TapPolynomial &taps)
    : length_(seed.bits()), state_(seed.words().begin(), seed.words().end()), mask_(word_count(seed.bits()), 0) {
    if (taps.degree() != seed.bits())
        throw std::invalid_argument("Lfsr: polynomial degree " + std::to_string(taps.degree()) +
                                    " does not match key length " + std::to_string(seed.bits()));
    if (seed.is_zero()) throw std::invalid_argument("Lfsr: all-zero seed gives a constant stream");
    for (auto e : taps.exponents()) {
        if (e < length_) mask_[e / 64] |= std::uint64_t{1} << (e % 64);
    }
}

bool Lfsr::next() {
    const bool out = state_[0] & 1u;
    unsigned parity = 0;
    for (std::size_t w = 0; w < state_.size(); ++w) parity ^= static_cast<unsigned>(std::popcount(state_[w] & mask_[w]));
    for (std::size_t w = 0; w + 1 < state_.size(); ++w) state_[w] = (state_[w] >> 1) | (state_[w + 1] << 63);
    state_.back() >>= 1;
    if (parity & 1u) {
        const unsigned top = length_ - 1;
        state_[top / 64] |= std::uint64_t{1} << (top % 64);
    }
    return out;
}

Bits lfsr_stream(const SeedKey &seed, const TapPolynomial &taps, std::size_t count) {
    Lfsr lfsr(seed, taps);
    Bits out(count);
    for (auto &b : out) b = lfsr.next() ? 1 : 0;
    return out;
}

// --- CipherConfig -----------------------------------------------------------

CipherConfig CipherConfig::with_defaults(unsigned num_bases, double photons, unsigned key_bits) {
    CipherConfig c;
    c.num_bases = num_bases;
    c.photons = photons;
    c.key_bits = key_bits;
    auto main = maximal_taps(key_bits, 0);
    auto osk = maximal_taps(key_bits, 1);
    if (!main || !osk) throw std::invalid_argument("no shipped maximal taps for key length " + std::to_string(key_bits));
    c.taps = *main;
    c.osk_taps = *osk;
    return c;
}

void CipherConfig::validate() const {
    if (!is_power_of_two(num_bases)) throw std::invalid_argument("num_bases must be a power of two");
    if (num_bases > kMaxEncodedBases) throw std::invalid_argument("num_bases must be <= 32768");
    if (key_bits < 4) throw std::invalid_argument("key_bits must be >= 4");
    if (taps.empty()) throw std::invalid_argument("taps missing");
    if (taps.degree() != key_bits) throw std::invalid_argument("taps degree must equal key_bits");
    if (osk) {
        if (osk_taps.empty()) throw std::invalid_argument("osk_taps missing");
        if (osk_taps.degree() != key_bits) throw std::invalid_argument("osk_taps degree must equal key_bits");
    }
    if (!(transmissivity > 0.0 && transmissivity <= 1.0)) throw std::invalid_argument("transmissivity must be in (0, 1]");
    if (!(photons >= 0.0)) throw std::invalid_argument("photons must be >= 0");
    (void)constellation();
}

unsigned CipherConfig::bits_per_symbol() const { return static_cast<unsigned>(std::countr_zero(num_bases)); }

Constellation CipherConfig::constellation() const {
    if (kind == Modulation::psk) return make_psk(num_bases, photons);
    return make_ask(num_bases, photons_min, photons, transmissivity);
}

std::uint64_t CipherConfig::symbols_per_period() const {
    if (key_bits > kMaxTrackedPeriodBits) return 0;
    const std::uint64_t period = (std::uint64_t{1} << key_bits) - 1;
    const unsigned m = bits_per_symbol();
    return m == 0 ? period : period / m;
}

// --- Key schedule -----------------------------------------------------------

KeySchedule::KeySchedule(const CipherConfig &config, const SeedKey &seed)
    : main_(seed, config.taps), bits_per_symbol_(config.bits_per_symbol()) {
    if (config.osk) osk_.emplace(seed, config.osk_taps);
    if (seed.bits() <= kMaxTrackedPeriodBits && bits_per_symbol_ > 0) {
        period_bits_ = (std::uint64_t{1} << seed.bits()) - 1;
        usable_bits_ = period_bits_ - period_bits_ % bits_per_symbol_;
    }
}

KeyedSlot KeySchedule::next() {
    KeyedSlot slot;
    for (unsigned i = 0; i < bits_per_symbol_; ++i) slot.symbol = (slot.symbol << 1) | (main_.next() ? 1u : 0u);
    if (period_bits_ != 0) {
        position_ += bits_per_symbol_;
        if (position_ == usable_bits_) {
            for (std::uint64_t skip = usable_bits_; skip < period_bits_; ++skip) (void)main_.next();
            position_ = 0;
        }
    }
    if (osk_) slot.polarity = osk_->next();
    return slot;
}

RunningKey running_key(const CipherConfig &config, const SeedKey &seed, std::size_t count) {
    if (!is_power_of_two(config.num_bases)) throw std::invalid_argument("running_key: num_bases must be a power of two");
    KeySchedule schedule(config, seed);
    RunningKey key;
    key.symbols.resize(count);
    for (auto &s : key.symbols) s = schedule.next().symbol;
    return key;
}

// --- Encoder / Decoder ------------------------------------------------------

Encoder::Encoder(const CipherConfig &config, const SeedKey &seed)
    : num_bases_(config.num_bases), schedule_(validated(config), seed) {}

std::uint32_t Encoder::push(bool bit) {
    const KeyedSlot slot = schedule_.next();
    const std::uint32_t x = (bit != slot.polarity) ? 1u : 0u;
    return (slot.symbol + x * num_bases_) % (2 * num_bases_);
}

Decoder::Decoder(const CipherConfig &config, const SeedKey &seed)
    : num_bases_(config.num_bases), schedule_(validated(config), seed) {}

bool Decoder::push(std::uint32_t index) {
    const std::uint32_t n = 2 * num_bases_;
    if (index >= n) throw std::out_of_range("Decoder: index " + std::to_string(index) + " >= " + std::to_string(n));
    const KeyedSlot slot = schedule_.next();
    const bool x = ((index + n - slot.symbol) % n) / num_bases_ != 0;
    return x != slot.polarity;
}

StateSequence encode(std::span<const std::uint8_t> plaintext, const CipherConfig &config, const SeedKey &seed) {
    Encoder enc(config, seed);
    StateSequence seq;
    seq.indices.reserve(plaintext.size());
    for (auto b : plaintext) seq.indices.push_back(enc.push(b != 0));
    return seq;
}

Bits decode(const StateSequence &sequence, const CipherConfig &config, const SeedKey &seed) {
    Decoder dec(config, seed);
    Bits out;
    out.reserve(sequence.indices.size());
    for (auto s : sequence.indices) out.push_back(dec.push(s) ? 1 : 0);
    return out;
}

double sequence_count_log2(const CipherConfig &config) {
    if (config.num_bases < 2) throw std::invalid_argument("sequence_count_log2: need M >= 2");
    const double m = std::log2(static_cast<double>(config.num_bases));
    return std::exp2(static_cast<double>(config.key_bits)) / m * std::log2(2.0 * config.num_bases);
}

SeedKey derive_seed_key(unsigned bits, std::uint64_t seed) {
    if (bits == 0) throw std::invalid_argument("derive_seed_key: need at least one bit");
    const std::size_t words = (bits + 63) / 64;
    for (std::uint64_t attempt = 0;; ++attempt) {
        RngStream rng(seed, stream_id(StreamPurpose::key_material, attempt));
        std::vector<std::uint64_t> w(words);
        for (auto &x : w) x = rng.next_u64();
        SeedKey key(bits, std::move(w));
        if (!key.is_zero()) return key;
    }
}

Bits random_plaintext(std::size_t count, std::uint64_t seed) {
    RngStream rng(seed, stream_id(StreamPurpose::plaintext, 0));
    Bits bits(count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 64 == 0) word = rng.next_u64();
        bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
    }
    return bits;
}

} // namespace y00

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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "y00/cipher.hpp"
#include "y00/rng.hpp"

namespace y00 {
namespace {

std::string as_string(const Bits &bits) {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::uint64_t find_period(const SeedKey &seed, const TapPolynomial &taps) {
    Lfsr lfsr(seed, taps);
    const std::vector<std::uint64_t> start(lfsr.state().begin(), lfsr.state().end());
    for (std::uint64_t n = 1;; ++n) {
        lfsr.next();
        if (std::equal(start.begin(), start.end(), lfsr.state().begin())) return n;
    }
}

Bits pattern_bits(std::size_t n, std::uint64_t seed) { return random_plaintext(n, seed); }

TEST(Lfsr, FourBitHandRun) {
    const auto bits = lfsr_stream(SeedKey::from_value(4, 1), TapPolynomial({4, 1, 0}), 15);
    EXPECT_EQ(as_string(bits), "100010011010111");
    // The 15 consecutive 4-bit windows are every nonzero state once.
    const auto ext = lfsr_stream(SeedKey::from_value(4, 1), TapPolynomial({4, 1, 0}), 18);
    std::map<unsigned, int> seen;
    for (int i = 0; i < 15; ++i) seen[ext[i] | ext[i + 1] << 1 | ext[i + 2] << 2 | ext[i + 3] << 3]++;
    EXPECT_EQ(seen.size(), 15u);
    EXPECT_EQ(seen.count(0), 0u);
    EXPECT_EQ(find_period(SeedKey::from_value(4, 1), TapPolynomial({4, 1, 0})), 15u);
}

TEST(Lfsr, ShippedTapsAreMaximal) {
    for (unsigned k = 4; k <= 16; ++k) {
        for (unsigned variant : {0u, 1u}) {
            const auto taps = maximal_taps(k, variant);
            ASSERT_TRUE(taps.has_value()) << k;
            EXPECT_EQ(taps->degree(), k);
            EXPECT_EQ(find_period(SeedKey::from_value(k, 1), *taps), (std::uint64_t{1} << k) - 1) << k << " " << variant;
        }
        EXPECT_NE(*maximal_taps(k, 0), *maximal_taps(k, 1)) << k;
    }
    for (unsigned k : {17u, 20u, 32u, 64u, 96u, 100u, 127u, 128u}) {
        EXPECT_TRUE(maximal_taps(k, 0).has_value()) << k;
        EXPECT_TRUE(maximal_taps(k, 1).has_value()) << k;
    }
    EXPECT_FALSE(maximal_taps(3).has_value());
    EXPECT_FALSE(maximal_taps(200).has_value());
}

TEST(Lfsr, RecurrenceHoldsForWideRegister) {
    const auto taps = *maximal_taps(100);
    std::vector<std::uint64_t> words = {0x0123456789abcdefULL, 0x0000000fedcba987ULL};
    const auto bits = lfsr_stream(SeedKey(100, words), taps, 600);
    for (std::size_t n = 0; n + 100 < bits.size(); ++n) {
        unsigned parity = 0;
        for (unsigned e : taps.exponents())
            if (e < 100) parity ^= bits[n + e];
        ASSERT_EQ(bits[n + 100], parity) << n;
    }
    for (unsigned i = 0; i < 100; ++i) EXPECT_EQ(bits[i], (words[i / 64] >> (i % 64)) & 1u);
}

TEST(Lfsr, DeterministicAndRejectsZeroSeed) {
    const auto taps = *maximal_taps(12);
    const auto seed = SeedKey::from_value(12, 0xabc);
    EXPECT_EQ(lfsr_stream(seed, taps, 5000), lfsr_stream(seed, taps, 5000));
    EXPECT_THROW(lfsr_stream(SeedKey::from_value(12, 0), taps, 10), std::invalid_argument);
    EXPECT_THROW(Lfsr(SeedKey::from_value(8, 3), taps), std::invalid_argument);
    EXPECT_THROW(TapPolynomial({4}), std::invalid_argument);
}

TEST(SeedKey, ByteRoundTrip) {
    const std::vector<std::uint8_t> bytes = {0x8d, 0x01, 0xff};
    const auto k = SeedKey::from_bytes(20, bytes);
    EXPECT_TRUE(k.bit(0));
    EXPECT_FALSE(k.bit(1));
    EXPECT_TRUE(k.bit(7));
    EXPECT_TRUE(k.bit(8));
    EXPECT_TRUE(k.bit(19));
    const auto out = k.to_bytes();
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0], 0x8d);
    EXPECT_EQ(out[2], 0x0f);  // bits above 20 dropped
    EXPECT_EQ(SeedKey::from_bytes(20, out), k);
    EXPECT_EQ(SeedKey::from_value(8, 141), SeedKey::from_bytes(8, std::vector<std::uint8_t>{141}));
    EXPECT_THROW(SeedKey::from_bytes(20, std::vector<std::uint8_t>{1, 2}), std::invalid_argument);
}

TEST(SeedKey, DerivedKeysNonzeroAndReproducible) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        EXPECT_FALSE(derive_seed_key(4, s).is_zero());
        EXPECT_EQ(derive_seed_key(100, s), derive_seed_key(100, s));
    }
    EXPECT_NE(derive_seed_key(100, 1), derive_seed_key(100, 2));
}

// --- running key -----------------------------------------------------------------

TEST(RunningKey, BinaryBasesUseRawBits) {
    auto cfg = CipherConfig::with_defaults(2, 1.0, 12);
    const auto seed = SeedKey::from_value(12, 0x5a5);
    const auto bits = lfsr_stream(seed, cfg.taps, 300);
    const auto key = running_key(cfg, seed, 300);
    for (std::size_t i = 0; i < 300; ++i) EXPECT_EQ(key.symbols[i], bits[i]);
}

TEST(RunningKey, BigEndianBlocks) {
    // Seed bits 1,0,1,1,0,0,0,1 are the first eight output bits.
    const auto cfg = CipherConfig::with_defaults(16, 1.0, 8);
    const auto key = running_key(cfg, SeedKey::from_value(8, 141), 2);
    ASSERT_EQ(key.symbols.size(), 2u);
    EXPECT_EQ(key.symbols[0], 11u);
    EXPECT_EQ(key.symbols[1], 1u);
}

TEST(RunningKey, PeriodHistogramK12) {
    // Non-overlapping blocks over one period, one count per block; frozen
    // from an independent enumeration with the same taps and seed 1.
    struct Expect {
        unsigned m, min, max;
        std::uint64_t blocks;
    };
    const auto taps = *maximal_taps(12);
    for (const auto &e : {Expect{1, 2047, 2048, 4095}, Expect{2, 487, 529, 2047}, Expect{4, 50, 76, 1023},
                          Expect{6, 4, 18, 682}}) {
        CipherConfig cfg = CipherConfig::with_defaults(1u << e.m, 1.0, 12);
        ASSERT_EQ(cfg.symbols_per_period(), e.blocks);
        const auto key = running_key(cfg, SeedKey::from_value(12, 1), e.blocks);
        std::vector<unsigned> hist(1u << e.m, 0);
        for (auto s : key.symbols) hist[s]++;
        EXPECT_EQ(*std::min_element(hist.begin(), hist.end()), e.min) << e.m;
        EXPECT_EQ(*std::max_element(hist.begin(), hist.end()), e.max) << e.m;
        // The next period repeats exactly.
        const auto two = running_key(cfg, SeedKey::from_value(12, 1), 2 * e.blocks);
        EXPECT_TRUE(std::equal(two.symbols.begin(), two.symbols.begin() + e.blocks, two.symbols.begin() + e.blocks));
    }
    // Cyclic overlapping windows: every nonzero 4-bit pattern 2^8 times.
    auto bits = lfsr_stream(SeedKey::from_value(12, 1), taps, 4095 + 4);
    std::vector<unsigned> hist(16, 0);
    for (std::size_t j = 0; j < 4095; ++j) hist[bits[j] << 3 | bits[j + 1] << 2 | bits[j + 2] << 1 | bits[j + 3]]++;
    EXPECT_EQ(hist[0], 255u);
    for (unsigned v = 1; v < 16; ++v) EXPECT_EQ(hist[v], 256u);
}

TEST(RunningKey, RejectsNonPowerOfTwo) {
    auto cfg = CipherConfig::with_defaults(4, 1.0, 8);
    cfg.num_bases = 6;
    EXPECT_THROW(running_key(cfg, SeedKey::from_value(8, 1), 4), std::invalid_argument);
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

// --- encode / decode --------------------------------------------------------------

TEST(Encode, DefinitionExamples) {
    const auto cfg = CipherConfig::with_defaults(2, 1.0, 4);
    const auto seed = SeedKey::from_value(4, 1);  // first running-key symbol 1
    EXPECT_EQ(encode(std::vector<std::uint8_t>{1}, cfg, seed).indices.at(0), 3u);

    const auto big = CipherConfig::with_defaults(64, 1.0, 12);
    const auto s12 = SeedKey::from_value(12, 0x9e3);
    const auto key = running_key(big, s12, 500);
    const auto idx = encode(Bits(500, 0), big, s12);
    EXPECT_EQ(idx.indices, key.symbols);
}

TEST(Encode, ExhaustivePairsInvertible) {
    // Every (k, x) pair for M <= 16 appears given enough slots; decode each.
    for (unsigned m : {1u, 2u, 4u, 8u, 16u}) {
        for (bool osk : {false, true}) {
            auto cfg = CipherConfig::with_defaults(m, 1.0, 8);
            cfg.osk = osk;
            const auto seed = SeedKey::from_value(8, 77);
            const auto pt = pattern_bits(4000, m);
            const auto seq = encode(pt, cfg, seed);
            ASSERT_EQ(seq.indices.size(), pt.size());
            std::map<std::pair<std::uint32_t, int>, int> pairs;
            KeySchedule sched(cfg, seed);
            for (std::size_t t = 0; t < pt.size(); ++t) {
                const auto slot = sched.next();
                EXPECT_EQ(seq.indices[t], (slot.symbol + ((pt[t] ^ slot.polarity) ? m : 0)) % (2 * m));
                pairs[{slot.symbol, pt[t]}]++;
            }
            EXPECT_EQ(pairs.size(), 2u * m) << m;
            EXPECT_EQ(decode(seq, cfg, seed), pt) << m << " " << osk;
        }
    }
}

TEST(Encode, AntipodalPairsPerSlot) {
    auto cfg = CipherConfig::with_defaults(16, 1.0, 10);
    cfg.osk = true;
    const auto seed = SeedKey::from_value(10, 0x2f1);
    const auto zeros = encode(Bits(3000, 0), cfg, seed);
    const auto ones = encode(Bits(3000, 1), cfg, seed);
    for (std::size_t t = 0; t < 3000; ++t) EXPECT_EQ((zeros.indices[t] + 16) % 32, ones.indices[t]);
}

TEST(Encode, FuzzedRoundTripLargeM) {
    RngStream rng(3, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned m = 1u << (5 + rng.next_u32() % 8);
        auto cfg = CipherConfig::with_defaults(m, 1.0, 16 + rng.next_u32() % 49);
        cfg.osk = rng.next_u32() & 1;
        const auto seed = derive_seed_key(cfg.key_bits, trial);
        const auto pt = pattern_bits(1000 + rng.next_u32() % 1000, trial);
        EXPECT_EQ(decode(encode(pt, cfg, seed), cfg, seed), pt) << m;
    }
}

double wrong_seed_ber(unsigned m, bool osk) {
    auto cfg = CipherConfig::with_defaults(m, 1.0, 20);
    cfg.osk = osk;
    const auto pt = pattern_bits(10000, 42);
    const auto seq = encode(pt, cfg, SeedKey::from_value(20, 0x12345));
    const auto out = decode(seq, cfg, SeedKey::from_value(20, 0x54321));
    std::size_t errors = 0;
    for (std::size_t i = 0; i < pt.size(); ++i) errors += pt[i] != out[i];
    return static_cast<double>(errors) / 1e4;
}

TEST(Decode, WrongSeedUncorrelated) {
    // Without OSK a wrong key flips the bit iff k < k', so BER = (M - 1) / 2M.
    for (unsigned m : {2u, 16u, 64u, 256u}) {
        const double expected = (m - 1.0) / (2.0 * m);
        EXPECT_NEAR(wrong_seed_ber(m, false), expected, 4.0 * std::sqrt(0.25 / 1e4)) << m;
    }
    EXPECT_NEAR(wrong_seed_ber(64, false), 0.5, 0.02);
    for (unsigned m : {1u, 2u, 16u, 64u}) EXPECT_NEAR(wrong_seed_ber(m, true), 0.5, 0.02) << m;
}

TEST(Decode, EmptyAndOutOfRange) {
    const auto cfg = CipherConfig::with_defaults(4, 1.0, 8);
    const auto seed = SeedKey::from_value(8, 9);
    EXPECT_TRUE(decode(StateSequence{}, cfg, seed).empty());
    EXPECT_TRUE(encode(Bits{}, cfg, seed).indices.empty());
    EXPECT_THROW(decode(StateSequence{{8}}, cfg, seed), std::out_of_range);
}

// --- counting ---------------------------------------------------------------------

TEST(SequenceCount, Values) {
    EXPECT_DOUBLE_EQ(sequence_count_log2(CipherConfig::with_defaults(16, 1.0, 8)), 320.0);
    for (unsigned k = 4; k <= 20; ++k)
        EXPECT_DOUBLE_EQ(sequence_count_log2(CipherConfig::with_defaults(2, 1.0, k)), std::exp2(k + 1.0));
    double last = 0.0;
    for (unsigned k = 4; k <= 128; ++k) {
        if (!maximal_taps(k)) continue;
        const double v = sequence_count_log2(CipherConfig::with_defaults(64, 1.0, k));
        EXPECT_GT(v, last);
        last = v;
    }
    auto one = CipherConfig::with_defaults(2, 1.0, 8);
    one.num_bases = 1;
    EXPECT_THROW(sequence_count_log2(one), std::invalid_argument);
}

TEST(CipherConfig, PeriodAndValidation) {
    EXPECT_EQ(CipherConfig::with_defaults(16, 1.0, 12).symbols_per_period(), 1023u);
    EXPECT_EQ(CipherConfig::with_defaults(64, 1.0, 12).symbols_per_period(), 682u);
    EXPECT_EQ(CipherConfig::with_defaults(64, 1.0, 12).bits_per_symbol(), 6u);
    auto c = CipherConfig::with_defaults(8, 1.0, 12);
    EXPECT_NO_THROW(c.validate());
    c.key_bits = 3;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = CipherConfig::with_defaults(8, 1.0, 12);
    c.taps = *maximal_taps(11);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = CipherConfig::with_defaults(8, 1.0, 12);
    c.transmissivity = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = CipherConfig::with_defaults(8, 1.0, 12);
    c.photons = -1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Plaintext, RandomBitsBalancedAndSeeded) {
    const auto a = random_plaintext(100000, 5);
    EXPECT_EQ(a, random_plaintext(100000, 5));
    EXPECT_NE(a, random_plaintext(100000, 6));
    std::size_t ones = 0;
    for (auto b : a) {
        ASSERT_LE(b, 1);
        ones += b;
    }
    EXPECT_NEAR(static_cast<double>(ones) / 1e5, 0.5, 0.01);
}

} // namespace
} // namespace y00

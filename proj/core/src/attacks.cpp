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

#include "y00/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "y00/numerics.hpp"
#include "y00/parallel.hpp"

namespace y00 {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_heterodyne(const MeasurementRecord &record, const char *who) {
    if (record.mode != Quadrature::heterodyne)
        throw std::invalid_argument(std::string(who) + ": needs a heterodyne record");
}

/// Log-density of a heterodyne sample up to a constant: -|y - mu|^2 / (2 sigma^2).
inline double heterodyne_loglik(std::complex<double> y, std::complex<double> mu) {
    return -std::norm(y - mu) / (2.0 * quadrature_variance(Quadrature::heterodyne));
}

std::vector<std::size_t> indices_for_bit(const CipherConfig &config, bool bit) {
    const std::size_t m = config.num_bases;
    std::vector<std::size_t> out;
    for (int r = 0; r <= (config.osk ? 1 : 0); ++r) {
        const bool x = bit != (r == 1);
        for (std::size_t k = 0; k < m; ++k) out.push_back((k + (x ? m : 0)) % (2 * m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_probability(double p, double hi, const char *who) {
    if (!(p >= 0.0 && p <= hi)) throw std::invalid_argument(std::string(who) + ": probability out of range");
}

} // namespace

std::string_view to_string(AttackKind kind) {
    switch (kind) {
    case AttackKind::ctoa_data: return "ctoa_data";
    case AttackKind::ctoa_key: return "ctoa_key";
    case AttackKind::kpa_key: return "kpa_key";
    case AttackKind::collective: return "collective";
    case AttackKind::repetition: return "repetition";
    }
    return "unknown";
}

AttackReport eve_ctoa_data(const MeasurementRecord &record, const CipherConfig &config,
                           std::span<const std::uint8_t> truth, unsigned threads) {
    config.validate();
    require_heterodyne(record, "eve_ctoa_data");
    if (truth.size() != record.samples.size())
        throw std::invalid_argument("eve_ctoa_data: truth length does not match record length");

    const Constellation received = config.constellation().attenuated(record.transmissivity);
    const auto set0 = indices_for_bit(config, false);
    const auto set1 = indices_for_bit(config, true);
    const BinaryPrior prior{};

    std::vector<std::uint8_t> wrong(record.samples.size(), 0);
    parallel_for(record.samples.size(), threads, [&](std::size_t t) {
        const auto y = record.samples[t];
        std::vector<double> terms0(set0.size()), terms1(set1.size());
        for (std::size_t i = 0; i < set0.size(); ++i) terms0[i] = heterodyne_loglik(y, received[set0[i]].amplitude);
        for (std::size_t i = 0; i < set1.size(); ++i) terms1[i] = heterodyne_loglik(y, received[set1[i]].amplitude);
        const double l0 = std::log(prior.p0) - std::log(static_cast<double>(set0.size())) + log_sum_exp(terms0);
        const double l1 = std::log(prior.p1) - std::log(static_cast<double>(set1.size())) + log_sum_exp(terms1);
        bool guess;
        if (l0 == l1) {
            RngStream coin(record.seed, stream_id(StreamPurpose::tie_break, t));
            guess = (coin.next_u32() & 1u) != 0;
        } else {
            guess = l1 > l0;
        }
        wrong[t] = guess != (truth[t] != 0) ? 1 : 0;
    });

    std::size_t errors = 0;
    for (auto w : wrong) errors += w;

    AttackReport report;
    report.kind = AttackKind::ctoa_data;
    report.num_bases = config.num_bases;
    report.photons = config.photons;
    report.transmissivity = record.transmissivity;
    report.prior = prior;
    report.empirical = EmpiricalRate::from_counts(errors, record.samples.size());
    report.bound = helstrom_binary_mixed(WeightedEnsemble::uniform(received, set0),
                                         WeightedEnsemble::uniform(received, set1), prior);
    report.trials = record.samples.size();
    report.seed = record.seed;
    return report;
}

AttackReport eve_kpa_key_symbol(const MeasurementRecord &record, const CipherConfig &config, const SeedKey &truth_key,
                                std::span<const std::uint8_t> plaintext, KeyTarget target, unsigned threads) {
    config.validate();
    require_heterodyne(record, "eve_kpa_key_symbol");
    const bool known = target == KeyTarget::known_plaintext;
    if (known && plaintext.size() != record.samples.size())
        throw std::invalid_argument("eve_kpa_key_symbol: plaintext length does not match record length");

    const Constellation received = config.constellation().attenuated(record.transmissivity);
    const std::uint32_t m = config.num_bases;
    const std::uint32_t n = 2 * m;

    std::vector<std::uint32_t> true_symbols(record.samples.size());
    KeySchedule schedule(config, truth_key);
    for (auto &k : true_symbols) k = schedule.next().symbol;

    std::vector<std::uint8_t> wrong(record.samples.size(), 0);
    parallel_for(record.samples.size(), threads, [&](std::size_t t) {
        const auto y = record.samples[t];
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_symbol = 0;
        for (std::uint32_t s = 0; s < n; ++s) {
            const std::uint32_t k = s % m;
            if (known && !config.osk) {
                // Only index (k + x M) mod 2M is possible for this slot.
                const std::uint32_t expected = (k + (plaintext[t] != 0 ? m : 0)) % n;
                if (s != expected) continue;
            }
            const double d = std::norm(y - received[s].amplitude);
            if (d < best) {
                best = d;
                best_symbol = k;
            }
        }
        wrong[t] = best_symbol != true_symbols[t] ? 1 : 0;
    });

    std::size_t errors = 0;
    for (auto w : wrong) errors += w;

    AttackReport report;
    report.kind = known ? AttackKind::kpa_key : AttackKind::ctoa_key;
    report.num_bases = config.num_bases;
    report.photons = config.photons;
    report.transmissivity = record.transmissivity;
    report.empirical = EmpiricalRate::from_counts(errors, record.samples.size());
    const std::size_t bound_states = (known && !config.osk) ? m : n;
    if (config.kind != Modulation::psk)
        throw std::invalid_argument("eve_kpa_key_symbol: the symmetric bound needs a PSK constellation");
    if (bound_states < 2) {
        report.bound.value = 0.0;
        report.bound.kind = BoundKind::error;
        report.bound.method = BoundMethod::closed_form;
    } else {
        report.bound = srm_symmetric(bound_states, config.photons * record.transmissivity);
    }
    report.trials = record.samples.size();
    report.seed = record.seed;
    return report;
}

KeyPosterior posterior_entropy(std::span<const double> log_likelihoods) {
    if (log_likelihoods.empty()) throw std::invalid_argument("posterior_entropy: no candidates");
    const auto peak_it = std::max_element(log_likelihoods.begin(), log_likelihoods.end());
    const double peak = *peak_it;
    const auto peak_index = static_cast<std::size_t>(peak_it - log_likelihoods.begin());

    // log R with R = sum_{j != peak} exp(l_j - peak); then -ln p_peak = log1p(R).
    std::vector<double> rest;
    rest.reserve(log_likelihoods.size() - 1);
    for (std::size_t j = 0; j < log_likelihoods.size(); ++j)
        if (j != peak_index) rest.push_back(log_likelihoods[j] - peak);
    const double log_r = log_sum_exp(rest);
    const double log_norm = log_r == kNegInf ? 0.0 : std::log1p(std::exp(log_r)); // ln Z - peak

    // H = sum_i p_i (-ln p_i); each term kept as ln p_i + ln(-ln p_i).
    std::vector<double> terms;
    terms.reserve(log_likelihoods.size());
    for (std::size_t i = 0; i < log_likelihoods.size(); ++i) {
        const double log_p = (log_likelihoods[i] - peak) - log_norm;
        double log_surprise;
        if (i == peak_index) {
            if (log_r == kNegInf) continue;
            log_surprise = log_r < -30.0 ? log_r : std::log(log_norm);
        } else {
            const double surprise = -log_p;
            if (!(surprise > 0.0)) continue;
            log_surprise = std::log(surprise);
        }
        terms.push_back(log_p + log_surprise);
    }
    const double log_h_nats = log_sum_exp(terms);

    KeyPosterior out;
    out.candidates = log_likelihoods.size();
    out.entropy_bits = std::exp(log_h_nats) / kLn2;
    out.log2_entropy_bits = log_h_nats == kNegInf ? kNegInf : log_h_nats / kLn2 - std::log2(kLn2);
    out.map_seed = peak_index;
    out.map_log2_probability = -log_norm / kLn2;
    return out;
}

KeyPosterior key_posterior_entropy(const MeasurementRecord &record, const CipherConfig &config,
                                   std::span<const std::uint8_t> plaintext, unsigned threads) {
    config.validate();
    require_heterodyne(record, "key_posterior_entropy");
    if (config.key_bits > kMaxExhaustiveKeyBits)
        throw std::invalid_argument("key_posterior_entropy: |K| = " + std::to_string(config.key_bits) +
                                    " is too large to enumerate (max " + std::to_string(kMaxExhaustiveKeyBits) + ")");
    if (plaintext.size() != record.samples.size())
        throw std::invalid_argument("key_posterior_entropy: plaintext length does not match record length");

    const Constellation received = config.constellation().attenuated(record.transmissivity);
    const std::uint32_t m = config.num_bases;
    const std::uint32_t n = 2 * m;
    const std::size_t candidates = (std::size_t{1} << config.key_bits) - 1;

    // Candidate i is seed value i + 1.
    std::vector<double> loglik(candidates, 0.0);
    parallel_for(candidates, threads, [&](std::size_t i) {
        KeySchedule schedule(config, SeedKey::from_value(config.key_bits, i + 1));
        double acc = 0.0;
        for (std::size_t t = 0; t < record.samples.size(); ++t) {
            const KeyedSlot slot = schedule.next();
            const bool x = (plaintext[t] != 0) != slot.polarity;
            const std::uint32_t s = (slot.symbol + (x ? m : 0)) % n;
            acc += heterodyne_loglik(record.samples[t], received[s].amplitude);
        }
        loglik[i] = acc;
    });

    KeyPosterior post = posterior_entropy(loglik);
    post.map_seed += 1;
    return post;
}

Equivocation data_equivocation(double pe_eve, std::size_t n_bits, unsigned key_bits) {
    check_probability(pe_eve, 0.5, "data_equivocation");
    Equivocation e;
    e.bits = static_cast<double>(n_bits) * binary_entropy(pe_eve);
    e.exceeds_shannon = e.bits > static_cast<double>(key_bits);
    return e;
}

LogProbability collective_success(double per_slot_pd, double slots) {
    check_probability(per_slot_pd, 1.0, "collective_success");
    if (!(slots >= 1.0)) throw std::invalid_argument("collective_success: need L >= 1");
    LogProbability p;
    p.log2 = per_slot_pd == 0.0 ? kNegInf : slots * std::log2(per_slot_pd);
    p.value = std::exp2(p.log2);
    return p;
}

double repetition_success(double pd, double trials) {
    check_probability(pd, 1.0, "repetition_success");
    if (!(trials >= 1.0)) throw std::invalid_argument("repetition_success: need J >= 1");
    if (pd == 1.0) return 1.0;
    return -std::expm1(trials * std::log1p(-pd));
}

CollectiveUsd collective_usd_bound(std::size_t n_states, double photons, unsigned key_bits) {
    CollectiveUsd out;
    out.per_slot = usd_symmetric(n_states, photons);
    out.slots = static_cast<double>(key_bits) / std::log2(static_cast<double>(n_states));
    out.log2_probability = out.slots * (*out.per_slot.log_value / kLn2);
    out.below_guessing = out.log2_probability < -static_cast<double>(key_bits);
    return out;
}

bool keygen_advantage(double pe_bob, double pe_eve) {
    check_probability(pe_bob, 0.5, "keygen_advantage");
    check_probability(pe_eve, 0.5, "keygen_advantage");
    return binary_entropy(pe_eve) > binary_entropy(pe_bob);
}

} // namespace y00

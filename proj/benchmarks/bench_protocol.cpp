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

#include <benchmark/benchmark.h>

#include "y00/attacks.hpp"
#include "y00/channel.hpp"
#include "y00/cipher.hpp"

namespace {

void BM_LfsrStream(benchmark::State &state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const auto seed = y00::derive_seed_key(k, 1);
    const auto taps = *y00::maximal_taps(k);
    for (auto _ : state) benchmark::DoNotOptimize(y00::lfsr_stream(seed, taps, 1 << 16));
    state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_LfsrStream)->Arg(12)->Arg(64)->Arg(128);

void BM_EncodeDecode(benchmark::State &state) {
    auto cfg = y00::CipherConfig::with_defaults(512, 100.0, 64);
    cfg.osk = true;
    const auto seed = y00::derive_seed_key(64, 2);
    const auto pt = y00::random_plaintext(1 << 16, 3);
    for (auto _ : state) benchmark::DoNotOptimize(y00::decode(y00::encode(pt, cfg, seed), cfg, seed));
    state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_EncodeDecode);

void BM_HeterodyneRecord(benchmark::State &state) {
    const auto cfg = y00::CipherConfig::with_defaults(64, 26.6, 12);
    const auto seed = y00::derive_seed_key(12, 4);
    const auto amps = y00::amplitudes_of(y00::encode(y00::random_plaintext(1 << 16, 5), cfg, seed), cfg.constellation());
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(y00::heterodyne_record(amps, 1.0, 6, threads));
    state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_HeterodyneRecord)->Arg(1)->Arg(4)->UseRealTime();

void BM_EveCtoaData(benchmark::State &state) {
    auto cfg = y00::CipherConfig::with_defaults(static_cast<unsigned>(state.range(0)), 100.0, 12);
    cfg.osk = true;
    const auto seed = y00::derive_seed_key(12, 7);
    const auto pt = y00::random_plaintext(4096, 8);
    const auto amps = y00::amplitudes_of(y00::encode(pt, cfg, seed), cfg.constellation());
    const auto rec = y00::heterodyne_record(amps, 1.0, 9);
    for (auto _ : state) benchmark::DoNotOptimize(y00::eve_ctoa_data(rec, cfg, pt));
    state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_EveCtoaData)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_KeyPosterior(benchmark::State &state) {
    auto cfg = y00::CipherConfig::with_defaults(64, 26.6, static_cast<unsigned>(state.range(0)));
    cfg.osk = true;
    const auto seed = y00::derive_seed_key(cfg.key_bits, 10);
    const auto pt = y00::random_plaintext(cfg.symbols_per_period(), 11);
    const auto amps = y00::amplitudes_of(y00::encode(pt, cfg, seed), cfg.constellation());
    const auto rec = y00::heterodyne_record(amps, 1.0, 12);
    for (auto _ : state) benchmark::DoNotOptimize(y00::key_posterior_entropy(rec, cfg, pt, 0));
}
BENCHMARK(BM_KeyPosterior)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

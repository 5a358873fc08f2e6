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

#include <vector>

#include <benchmark/benchmark.h>

#include "y00/detection.hpp"

namespace {

void BM_SrmSymmetric(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(y00::srm_symmetric(n, 100.0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SrmSymmetric)->Arg(64)->Arg(65)->Arg(2047)->Arg(2048)->Arg(16384)->Unit(benchmark::kMicrosecond);

void BM_UsdSymmetric(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(y00::usd_symmetric(n, 1e4));
}
BENCHMARK(BM_UsdSymmetric)->Arg(256)->Arg(2000)->Unit(benchmark::kMicrosecond);

void BM_HelstromMixedEvenOdd(benchmark::State &state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const auto c = y00::make_psk(m, y00::design_photons(m, 0.3));
    std::vector<std::size_t> even, odd;
    for (std::size_t i = 0; i < c.size(); ++i) (i % 2 ? odd : even).push_back(i);
    const auto e0 = y00::WeightedEnsemble::uniform(c, even);
    const auto e1 = y00::WeightedEnsemble::uniform(c, odd);
    for (auto _ : state) benchmark::DoNotOptimize(y00::helstrom_binary_mixed(e0, e1));
}
BENCHMARK(BM_HelstromMixedEvenOdd)->Arg(8)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_HelstromPure(benchmark::State &state) {
    const y00::CoherentPoint a{{1.0, 0.2}}, b{{-0.3, 0.8}};
    for (auto _ : state) benchmark::DoNotOptimize(y00::helstrom_binary_pure(a, b));
}
BENCHMARK(BM_HelstromPure);

} // namespace

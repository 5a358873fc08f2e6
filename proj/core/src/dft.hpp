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
#include <span>
#include <vector>

namespace y00::detail {

enum class DftSign { forward = -1, backward = +1 };

/// Unnormalized length-N DFT, X_k = sum_j x_j exp(sign * 2 pi i jk / N).
/// N is used as-is (no padding); FFTW handles arbitrary lengths.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> input, DftSign sign);

} // namespace y00::detail

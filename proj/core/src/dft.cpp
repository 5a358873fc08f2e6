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

#include "dft.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace y00::detail {

namespace {

// Only fftw_execute is thread-safe; planning and plan destruction are not.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(fftw_complex *p) const { fftw_free(p); }
};

} // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> input, DftSign sign) {
    const auto n = input.size();
    if (n == 0) return {};
    std::unique_ptr<fftw_complex, FftwFree> in(fftw_alloc_complex(n));
    std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n));
    if (!in || !out) throw std::bad_alloc();

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(),
                                sign == DftSign::forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw std::runtime_error("fftw: could not create plan");

    std::memcpy(in.get(), input.data(), n * sizeof(fftw_complex));
    fftw_execute(plan);

    std::vector<std::complex<double>> result(n);
    std::memcpy(static_cast<void *>(result.data()), out.get(), n * sizeof(fftw_complex));
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return result;
}

} // namespace y00::detail

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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "y00/cipher.hpp"

namespace y00::claims {

struct ClaimOptions {
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

struct ClaimResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string measured;
    std::string expected;
    std::string tolerance;
    double seconds = 0.0;
    double time_limit = 0.0;
    std::vector<std::string> notes;
};

inline constexpr int kClaimCount = 8;

ClaimResult run_claim(int id, const ClaimOptions &options);
std::vector<ClaimResult> run_claims(const ClaimOptions &options,
                                    const std::function<void(const ClaimResult &)> &on_result = {});

/// One line: status, id, name, measured, expected, tolerance, time.
std::string format_line(const ClaimResult &result);
nlohmann::json to_json(const ClaimResult &result);

/// PSK config with S set to the largest value keeping neighbor_error >= target.
CipherConfig designed_config(unsigned num_bases, double target_pe, unsigned key_bits, bool osk);

} // namespace y00::claims

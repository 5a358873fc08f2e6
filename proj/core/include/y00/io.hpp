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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "y00/attacks.hpp"
#include "y00/channel.hpp"
#include "y00/cipher.hpp"
#include "y00/detection.hpp"

namespace y00 {

/// Config rejected by validation; every issue is "<json-pointer>: <message>".
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string> &issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

/// Parses a cipher config object. `pointer` prefixes issue paths so nested
/// objects report e.g. "/cipher/num_bases". Missing taps default to the
/// shipped maximal polynomials for key_bits.
CipherConfig parse_cipher_config(const nlohmann::json &j, const std::string &pointer = "");
nlohmann::json to_json(const CipherConfig &config);

nlohmann::json to_json(const BoundReport &report);
nlohmann::json to_json(const EmpiricalRate &rate);
nlohmann::json to_json(const AttackReport &report);
nlohmann::json to_json(const KeyPosterior &posterior);

/// Key file: one line of JSON header, then ceil(|K|/8) raw seed bytes.
struct KeyFile {
    SeedKey seed;
    TapPolynomial taps;
    TapPolynomial osk_taps;
};
void write_key_file(const std::filesystem::path &path, const KeyFile &key);
KeyFile read_key_file(const std::filesystem::path &path);

enum class StreamFormat { binary, csv };

/// Index streams: little-endian uint16 per index, or one index per CSV line
/// under an "index" header.
void write_indices(const std::filesystem::path &path, const StateSequence &sequence, StreamFormat format);
StateSequence read_indices(const std::filesystem::path &path, StreamFormat format);

/// Records: float64 little-endian (re, im) pairs, or CSV "re,im" rows with 17
/// significant digits. Both carry a JSON sidecar at path + ".json" holding
/// mode, transmissivity and seed.
void write_record(const std::filesystem::path &path, const MeasurementRecord &record, StreamFormat format);
MeasurementRecord read_record(const std::filesystem::path &path);

/// %.17g.
std::string format_double(double value);

} // namespace y00

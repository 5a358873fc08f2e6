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
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "y00/io.hpp"

namespace y00 {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("y00io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

std::vector<unsigned char> slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> issues_of(const json &j, const std::string &pointer = "") {
    try {
        parse_cipher_config(j, pointer);
    } catch (const ConfigError &e) {
        return e.issues();
    }
    return {};
}

bool has_issue(const std::vector<std::string> &issues, const std::string &prefix) {
    return std::any_of(issues.begin(), issues.end(), [&](const auto &s) { return s.rfind(prefix, 0) == 0; });
}

TEST(Config, MinimalUsesShippedTaps) {
    const auto c = parse_cipher_config(json{{"num_bases", 64}, {"photons", 26.5}, {"key_bits", 12}});
    EXPECT_EQ(c, CipherConfig::with_defaults(64, 26.5, 12));
    EXPECT_FALSE(c.osk);
    EXPECT_EQ(c.transmissivity, 1.0);
}

TEST(Config, JsonRoundTrip) {
    auto c = CipherConfig::with_defaults(16, 3.25, 20);
    c.osk = true;
    c.transmissivity = 0.5;
    EXPECT_EQ(parse_cipher_config(to_json(c)), c);
    CipherConfig ask = CipherConfig::with_defaults(8, 40.0, 12);
    ask.kind = Modulation::ask;
    ask.photons_min = 4.0;
    EXPECT_EQ(parse_cipher_config(to_json(ask)), ask);
}

TEST(Config, IssuesCarryPointers) {
    const json bad = {{"num_bases", 6}, {"photons", "many"}, {"key_bits", 12}, {"colour", 1},
                      {"taps", {12, -1}}, {"osk", 1}};
    const auto issues = issues_of(bad, "/cipher");
    EXPECT_TRUE(has_issue(issues, "/cipher/colour: unknown property"));
    EXPECT_TRUE(has_issue(issues, "/cipher/num_bases: must be a power of two"));
    EXPECT_TRUE(has_issue(issues, "/cipher/photons: must be a number"));
    EXPECT_TRUE(has_issue(issues, "/cipher/taps/1: "));
    EXPECT_TRUE(has_issue(issues, "/cipher/osk: must be a boolean"));
    EXPECT_EQ(issues_of(json{{"photons", 1.0}, {"key_bits", 8}}), std::vector<std::string>{"/num_bases: required"});
    EXPECT_TRUE(has_issue(issues_of(json::array()), "/: must be an object"));
}

TEST(Config, AskRules) {
    json j = {{"num_bases", 4}, {"photons", 20.0}, {"key_bits", 8}, {"modulation", "ask"}};
    EXPECT_TRUE(has_issue(issues_of(j), "/photons_min: required"));
    j["photons_min"] = 0.5;
    EXPECT_TRUE(has_issue(issues_of(j), "/photons_min: must exceed 1/transmissivity"));
    j["photons_min"] = 25.0;
    EXPECT_TRUE(has_issue(issues_of(j), "/photons: must exceed photons_min"));
    j["modulation"] = "qam";
    EXPECT_TRUE(has_issue(issues_of(j), "/modulation: "));
}

TEST(Config, TapDegreeMustMatch) {
    const json j = {{"num_bases", 4}, {"photons", 1.0}, {"key_bits", 8}, {"taps", {7, 6, 0}}};
    EXPECT_TRUE(has_issue(issues_of(j), "/taps: degree must equal key_bits"));
    const json ok = {{"num_bases", 4}, {"photons", 1.0}, {"key_bits", 4}, {"taps", {4, 1, 0}}};
    EXPECT_EQ(parse_cipher_config(ok).taps, TapPolynomial({4, 1, 0}));
}

TEST_F(TempDir, KeyFileRoundTrip) {
    auto cfg = CipherConfig::with_defaults(8, 1.0, 20);
    const KeyFile key{derive_seed_key(20, 4), cfg.taps, cfg.osk_taps};
    write_key_file(dir_ / "k.bin", key);
    const auto back = read_key_file(dir_ / "k.bin");
    EXPECT_EQ(back.seed, key.seed);
    EXPECT_EQ(back.taps, key.taps);
    EXPECT_EQ(back.osk_taps, key.osk_taps);

    const auto bytes = slurp(dir_ / "k.bin");
    const auto nl = std::find(bytes.begin(), bytes.end(), '\n');
    ASSERT_NE(nl, bytes.end());
    const auto header = json::parse(bytes.begin(), nl);
    EXPECT_EQ(header.at("format"), "y00-key");
    EXPECT_EQ(header.at("key_bits"), 20);
    EXPECT_EQ(std::distance(nl, bytes.end()) - 1, 3);
    EXPECT_TRUE(std::equal(nl + 1, bytes.end(), key.seed.to_bytes().begin()));

    std::ofstream(dir_ / "junk.bin") << "{\"format\":\"other\"}\n";
    EXPECT_THROW(read_key_file(dir_ / "junk.bin"), std::runtime_error);
}

TEST_F(TempDir, IndicesBinaryLayout) {
    const StateSequence seq{{0, 1, 258, 65535, 7}};
    write_indices(dir_ / "i.bin", seq, StreamFormat::binary);
    const auto bytes = slurp(dir_ / "i.bin");
    const std::vector<unsigned char> expected = {0, 0, 1, 0, 2, 1, 255, 255, 7, 0};
    EXPECT_EQ(bytes, expected);
    EXPECT_EQ(read_indices(dir_ / "i.bin", StreamFormat::binary).indices, seq.indices);
    EXPECT_THROW(write_indices(dir_ / "x.bin", StateSequence{{65536}}, StreamFormat::binary), std::out_of_range);
}

TEST_F(TempDir, IndicesCsv) {
    const StateSequence seq{{3, 0, 31}};
    write_indices(dir_ / "i.csv", seq, StreamFormat::csv);
    const auto bytes = slurp(dir_ / "i.csv");
    EXPECT_EQ(std::string(bytes.begin(), bytes.end()), "index\n3\n0\n31\n");
    EXPECT_EQ(read_indices(dir_ / "i.csv", StreamFormat::csv).indices, seq.indices);
}

TEST_F(TempDir, RecordsRoundTripExactly) {
    MeasurementRecord rec;
    rec.samples = {{0.1, -2.5e-300}, {1.0 / 3.0, 12345.678901234567}, {-0.0, 6.02214076e23}};
    rec.mode = Quadrature::homodyne;
    rec.transmissivity = 0.3;
    rec.seed = 0xfedcba9876543210ULL;
    for (auto fmt : {StreamFormat::binary, StreamFormat::csv}) {
        const auto path = dir_ / (fmt == StreamFormat::csv ? "r.csv" : "r.bin");
        write_record(path, rec, fmt);
        ASSERT_TRUE(fs::exists(path.string() + ".json"));
        const auto back = read_record(path);
        EXPECT_EQ(back.samples, rec.samples);
        EXPECT_EQ(back.mode, rec.mode);
        EXPECT_EQ(back.transmissivity, rec.transmissivity);
        EXPECT_EQ(back.seed, rec.seed);
    }
    EXPECT_EQ(slurp(dir_ / "r.bin").size(), 3u * 16u);
}

TEST(Format, SeventeenDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Json, BoundReportNonFiniteIsNull) {
    BoundReport r;
    r.value = 0.25;
    r.method = BoundMethod::srm_fft;
    r.optimality_residual = 0.0;
    r.log_value = -std::numeric_limits<double>::infinity();
    const auto j = to_json(r);
    EXPECT_EQ(j.at("value"), 0.25);
    EXPECT_EQ(j.at("method"), "srm_fft");
    EXPECT_TRUE(j.at("log_value").is_null());
    EXPECT_EQ(j.at("optimality_residual"), 0.0);
}

} // namespace
} // namespace y00

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

#include "y00/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace y00 {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char *kKeyFormat = "y00-key";
constexpr const char *kRecordFormat = "y00-record";

std::string join_issues(const std::vector<std::string> &issues) {
    std::string out = "invalid config";
    for (const auto &i : issues) out += "\n  " + i;
    return out;
}

std::ofstream open_out(const fs::path &path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_in(const fs::path &path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

template <typename T>
T to_little_endian(T v) {
    if constexpr (std::endian::native == std::endian::big) {
        auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
        std::reverse(bytes.begin(), bytes.end());
        return std::bit_cast<T>(bytes);
    }
    return v;
}

json taps_json(const TapPolynomial &t) {
    return json(std::vector<unsigned>(t.exponents().begin(), t.exponents().end()));
}

std::string_view to_string(Quadrature q) { return q == Quadrature::homodyne ? "homodyne" : "heterodyne"; }

json optional_number(std::optional<double> v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

// --- config -----------------------------------------------------------------

CipherConfig parse_cipher_config(const json &j, const std::string &pointer) {
    std::vector<std::string> issues;
    auto issue = [&](const std::string &key, const std::string &msg) { issues.push_back(pointer + "/" + key + ": " + msg); };

    if (!j.is_object()) throw ConfigError({(pointer.empty() ? "/" : pointer) + ": must be an object"});

    static const std::vector<std::string> known = {"num_bases", "photons",        "photons_min", "key_bits",
                                                   "taps",      "osk_taps",       "osk",         "modulation",
                                                   "transmissivity"};
    for (const auto &[key, _] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) issue(key, "unknown property");
    }

    CipherConfig c;
    auto get_uint = [&](const char *key, unsigned &out, bool required) {
        if (!j.contains(key)) {
            if (required) issue(key, "required");
            return;
        }
        const auto &v = j.at(key);
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            issue(key, "must be a nonnegative integer");
            return;
        }
        out = v.get<unsigned>();
    };
    auto get_number = [&](const char *key, double &out, bool required) {
        if (!j.contains(key)) {
            if (required) issue(key, "required");
            return;
        }
        if (!j.at(key).is_number()) {
            issue(key, "must be a number");
            return;
        }
        out = j.at(key).get<double>();
    };
    auto get_taps = [&](const char *key, TapPolynomial &out) {
        if (!j.contains(key)) return;
        const auto &v = j.at(key);
        if (!v.is_array() || v.empty()) {
            issue(key, "must be a non-empty array of exponents");
            return;
        }
        std::vector<unsigned> e;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number_integer() || v[i].get<long long>() < 0) {
                issue(std::string(key) + "/" + std::to_string(i), "must be a nonnegative integer");
                return;
            }
            e.push_back(v[i].get<unsigned>());
        }
        try {
            out = TapPolynomial(e);
        } catch (const std::invalid_argument &ex) {
            issue(key, ex.what());
        }
    };

    get_uint("num_bases", c.num_bases, true);
    get_number("photons", c.photons, true);
    get_number("photons_min", c.photons_min, false);
    get_uint("key_bits", c.key_bits, true);
    get_number("transmissivity", c.transmissivity, false);
    if (j.contains("osk")) {
        if (!j.at("osk").is_boolean())
            issue("osk", "must be a boolean");
        else
            c.osk = j.at("osk").get<bool>();
    }
    if (j.contains("modulation")) {
        const auto &v = j.at("modulation");
        if (v == "psk")
            c.kind = Modulation::psk;
        else if (v == "ask")
            c.kind = Modulation::ask;
        else
            issue("modulation", "must be \"psk\" or \"ask\"");
    }

    if (c.num_bases == 0 || (c.num_bases & (c.num_bases - 1)) != 0) issue("num_bases", "must be a power of two");
    else if (c.num_bases > (1u << 15)) issue("num_bases", "must be <= 32768");
    if (c.key_bits < 4) issue("key_bits", "must be >= 4");
    if (!(c.photons >= 0.0)) issue("photons", "must be >= 0");
    if (!(c.transmissivity > 0.0 && c.transmissivity <= 1.0)) issue("transmissivity", "must be in (0, 1]");
    if (c.kind == Modulation::ask) {
        if (!j.contains("photons_min")) issue("photons_min", "required for ask modulation");
        else if (!(c.transmissivity > 0.0) || !(c.photons_min > 1.0 / c.transmissivity))
            issue("photons_min", "must exceed 1/transmissivity");
        if (!(c.photons > c.photons_min)) issue("photons", "must exceed photons_min for ask modulation");
    }

    get_taps("taps", c.taps);
    get_taps("osk_taps", c.osk_taps);
    if (c.taps.empty() || c.osk_taps.empty()) {
        if (auto d = maximal_taps(c.key_bits, 0); d && c.taps.empty()) c.taps = *d;
        if (auto d = maximal_taps(c.key_bits, 1); d && c.osk_taps.empty()) c.osk_taps = *d;
        if (c.taps.empty()) issue("taps", "required: no shipped maximal taps for key_bits = " + std::to_string(c.key_bits));
        if (c.osk && c.osk_taps.empty()) issue("osk_taps", "required when osk is set for this key_bits");
    }
    if (!c.taps.empty() && c.taps.degree() != c.key_bits) issue("taps", "degree must equal key_bits");
    if (c.osk && !c.osk_taps.empty() && c.osk_taps.degree() != c.key_bits) issue("osk_taps", "degree must equal key_bits");

    if (!issues.empty()) throw ConfigError(std::move(issues));
    c.validate();
    return c;
}

json to_json(const CipherConfig &c) {
    json j = {
        {"num_bases", c.num_bases},
        {"photons", c.photons},
        {"key_bits", c.key_bits},
        {"taps", taps_json(c.taps)},
        {"osk", c.osk},
        {"modulation", c.kind == Modulation::psk ? "psk" : "ask"},
        {"transmissivity", c.transmissivity},
    };
    if (!c.osk_taps.empty()) j["osk_taps"] = taps_json(c.osk_taps);
    if (c.kind == Modulation::ask) j["photons_min"] = c.photons_min;
    return j;
}

// --- reports ----------------------------------------------------------------

json to_json(const BoundReport &r) {
    return {
        {"value", r.value},
        {"kind", to_string(r.kind)},
        {"method", to_string(r.method)},
        {"optimality_residual", optional_number(r.optimality_residual)},
        {"log_value", optional_number(r.log_value)},
        {"eigen_clamp", r.eigen_clamp},
        {"residual_alarm", r.residual_alarm},
    };
}

json to_json(const EmpiricalRate &r) {
    return {{"rate", r.rate}, {"standard_error", r.standard_error}, {"count", r.count}};
}

json to_json(const AttackReport &r) {
    return {
        {"attack_kind", to_string(r.kind)},
        {"num_bases", r.num_bases},
        {"photons", r.photons},
        {"transmissivity", r.transmissivity},
        {"prior", {{"p0", r.prior.p0}, {"p1", r.prior.p1}}},
        {"empirical", to_json(r.empirical)},
        {"bound", to_json(r.bound)},
        {"key_posterior_entropy_bits", optional_number(r.key_posterior_entropy_bits)},
        {"log2_key_posterior_entropy_bits", optional_number(r.log2_key_posterior_entropy_bits)},
        {"trials", r.trials},
        {"seed", r.seed},
    };
}

json to_json(const KeyPosterior &p) {
    return {
        {"entropy_bits", p.entropy_bits},
        {"log2_entropy_bits", optional_number(p.log2_entropy_bits)},
        {"candidates", p.candidates},
        {"map_seed", p.map_seed},
        {"map_log2_probability", p.map_log2_probability},
    };
}

// --- key file ---------------------------------------------------------------

void write_key_file(const fs::path &path, const KeyFile &key) {
    const auto bytes = key.seed.to_bytes();
    json header = {
        {"format", kKeyFormat},
        {"version", 1},
        {"key_bits", key.seed.bits()},
        {"taps", taps_json(key.taps)},
        {"seed_bytes", bytes.size()},
    };
    if (!key.osk_taps.empty()) header["osk_taps"] = taps_json(key.osk_taps);
    auto out = open_out(path, std::ios::out | std::ios::binary);
    out << header.dump() << '\n';
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

KeyFile read_key_file(const fs::path &path) {
    auto in = open_in(path, std::ios::in | std::ios::binary);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": missing key header");
    const json header = json::parse(line);
    if (header.value("format", "") != kKeyFormat) throw std::runtime_error(path.string() + ": not a y00 key file");
    const auto bits = header.at("key_bits").get<unsigned>();
    const auto n = header.at("seed_bytes").get<std::size_t>();
    if (n != (bits + 7) / 8) throw std::runtime_error(path.string() + ": seed_bytes does not match key_bits");
    std::vector<std::uint8_t> bytes(n);
    in.read(reinterpret_cast<char *>(bytes.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) throw std::runtime_error(path.string() + ": truncated seed");
    KeyFile key{SeedKey::from_bytes(bits, bytes), TapPolynomial(header.at("taps").get<std::vector<unsigned>>()), {}};
    if (header.contains("osk_taps")) key.osk_taps = TapPolynomial(header.at("osk_taps").get<std::vector<unsigned>>());
    return key;
}

// --- index streams ----------------------------------------------------------

void write_indices(const fs::path &path, const StateSequence &sequence, StreamFormat format) {
    if (format == StreamFormat::csv) {
        auto out = open_out(path);
        out << "index\n";
        for (auto s : sequence.indices) out << s << '\n';
        return;
    }
    auto out = open_out(path, std::ios::out | std::ios::binary);
    for (auto s : sequence.indices) {
        if (s > 0xFFFFu) throw std::out_of_range("write_indices: index does not fit in 16 bits");
        const auto v = to_little_endian(static_cast<std::uint16_t>(s));
        out.write(reinterpret_cast<const char *>(&v), sizeof v);
    }
}

StateSequence read_indices(const fs::path &path, StreamFormat format) {
    StateSequence seq;
    if (format == StreamFormat::csv) {
        auto in = open_in(path);
        std::string line;
        std::getline(in, line);
        if (line != "index") throw std::runtime_error(path.string() + ": expected 'index' header");
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            seq.indices.push_back(static_cast<std::uint32_t>(std::stoul(line)));
        }
        return seq;
    }
    auto in = open_in(path, std::ios::in | std::ios::binary);
    std::uint16_t v;
    while (in.read(reinterpret_cast<char *>(&v), sizeof v)) seq.indices.push_back(to_little_endian(v));
    if (in.gcount() != 0) throw std::runtime_error(path.string() + ": odd trailing byte");
    return seq;
}

// --- records ----------------------------------------------------------------

void write_record(const fs::path &path, const MeasurementRecord &record, StreamFormat format) {
    if (format == StreamFormat::csv) {
        auto out = open_out(path);
        out << "re,im\n";
        for (const auto &s : record.samples) out << format_double(s.real()) << ',' << format_double(s.imag()) << '\n';
    } else {
        auto out = open_out(path, std::ios::out | std::ios::binary);
        for (const auto &s : record.samples) {
            const double pair[2] = {to_little_endian(s.real()), to_little_endian(s.imag())};
            out.write(reinterpret_cast<const char *>(pair), sizeof pair);
        }
    }
    const json sidecar = {
        {"format", kRecordFormat},
        {"encoding", format == StreamFormat::csv ? "csv" : "float64le"},
        {"mode", to_string(record.mode)},
        {"transmissivity", record.transmissivity},
        {"seed", record.seed},
        {"count", record.samples.size()},
    };
    auto side = open_out(fs::path(path.string() + ".json"));
    side << sidecar.dump(2) << '\n';
}

MeasurementRecord read_record(const fs::path &path) {
    auto side = open_in(fs::path(path.string() + ".json"));
    const json sidecar = json::parse(side);
    if (sidecar.value("format", "") != kRecordFormat) throw std::runtime_error(path.string() + ": bad record sidecar");
    MeasurementRecord record;
    record.mode = sidecar.at("mode") == "homodyne" ? Quadrature::homodyne : Quadrature::heterodyne;
    record.transmissivity = sidecar.at("transmissivity").get<double>();
    record.seed = sidecar.at("seed").get<std::uint64_t>();
    const auto count = sidecar.at("count").get<std::size_t>();
    record.samples.reserve(count);
    if (sidecar.at("encoding") == "csv") {
        auto in = open_in(path);
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos) throw std::runtime_error(path.string() + ": malformed CSV row");
            record.samples.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        }
    } else {
        auto in = open_in(path, std::ios::in | std::ios::binary);
        double pair[2];
        while (in.read(reinterpret_cast<char *>(pair), sizeof pair))
            record.samples.emplace_back(to_little_endian(pair[0]), to_little_endian(pair[1]));
    }
    if (record.samples.size() != count) throw std::runtime_error(path.string() + ": sample count mismatch");
    return record;
}

} // namespace y00

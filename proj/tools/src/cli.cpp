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

#include "y00tools/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "y00/attacks.hpp"
#include "y00/channel.hpp"
#include "y00/cipher.hpp"
#include "y00/constellation.hpp"
#include "y00/detection.hpp"
#include "y00/io.hpp"
#include "y00/numerics.hpp"
#include "y00/parallel.hpp"
#include "y00tools/claims.hpp"

namespace y00::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char *kManifestName = "manifest.json";

// Thrown for bad user input; maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(std::vector<std::string> issues)
        : std::runtime_error(issues.empty() ? "invalid input" : issues.front()), issues_(std::move(issues)) {}
    const std::vector<std::string> &issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : std::string(std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf")); }

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void write_text(const fs::path &path, const std::string &body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << body;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

StreamFormat parse_stream_format(const std::string &s) { return s == "csv" ? StreamFormat::csv : StreamFormat::binary; }

struct Manifest {
    std::string command;
    json config = json::object();
    std::optional<std::uint64_t> seed;
    std::string started_at = utc_now();
    std::vector<std::string> argv;
    json outputs = json::array();

    void add_output(const std::string &path, const std::string &role) { outputs.push_back({{"path", path}, {"role", role}}); }

    json finish() const {
        json j = {
            {"tool", "y00sim"},
            {"version", Y00_VERSION},
            {"command", command},
            {"config", config},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"argv", argv},
            {"started_at", started_at},
            {"finished_at", utc_now()},
            {"outputs", outputs},
        };
        return j;
    }
};

// --- bounds -----------------------------------------------------------------

struct BoundsOptions {
    std::vector<std::size_t> n;
    std::vector<double> s;
    std::string kind = "srm";
    std::optional<unsigned> key_bits;
    std::string format = "csv";
    std::string out_dir;
    unsigned threads = 0;
};

struct BoundRow {
    std::size_t n = 0;
    double s = 0.0;
    std::optional<BoundReport> report;
    std::optional<double> log2_value;
    std::optional<bool> below_guessing;
    std::string status = "ok";
};

std::pair<CoherentPoint, CoherentPoint> neighbor_pair(std::size_t n, double s) {
    const double r = std::sqrt(s);
    return {CoherentPoint{{r, 0.0}}, CoherentPoint{std::polar(r, 2.0 * kPi / static_cast<double>(n))}};
}

BoundRow bound_row(const BoundsOptions &o, std::size_t n, double s) {
    BoundRow row;
    row.n = n;
    row.s = s;
    try {
        BoundReport rep;
        if (o.kind == "srm") {
            rep = srm_symmetric(n, s);
        } else if (o.kind == "usd") {
            rep = usd_symmetric(n, s);
        } else if (o.kind == "helstrom") {
            const auto [a, b] = neighbor_pair(n, s);
            rep = helstrom_binary_pure(a, b);
        } else if (o.kind == "homodyne" || o.kind == "heterodyne") {
            const auto [a, b] = neighbor_pair(n, s);
            rep = quadrature_binary(a, b, o.kind == "homodyne" ? Quadrature::homodyne : Quadrature::heterodyne);
        } else {
            const auto c = collective_usd_bound(n, s, *o.key_bits);
            rep = c.per_slot;
            rep.value = std::exp2(c.log2_probability);
            rep.log_value = c.log2_probability * kLn2;
            row.below_guessing = c.below_guessing;
        }
        if (rep.log_value) row.log2_value = *rep.log_value / kLn2;
        row.report = rep;
    } catch (const std::exception &e) {
        row.status = e.what();
    }
    return row;
}

void validate_bounds(const BoundsOptions &o) {
    std::vector<std::string> issues;
    if (o.n.empty()) issues.push_back("--n: at least one value required");
    if (o.s.empty()) issues.push_back("--s: at least one value required");
    for (auto n : o.n)
        if (n < 2) issues.push_back("--n: every N must be >= 2 (got " + std::to_string(n) + ")");
    for (double s : o.s)
        if (!(s >= 0.0) || !std::isfinite(s)) issues.push_back("--s: every S must be finite and >= 0 (got " + format_double(s) + ")");
    if (o.kind == "collective-usd" && !o.key_bits) issues.push_back("--key-bits: required for --kind collective-usd");
    if (o.key_bits && *o.key_bits == 0) issues.push_back("--key-bits: must be >= 1");
    if (!issues.empty()) throw UsageError(issues);
}

int cmd_bounds(const BoundsOptions &o, const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    validate_bounds(o);
    Manifest manifest;
    manifest.command = "bounds";
    manifest.argv = argv;
    manifest.config = {{"n", o.n}, {"s", o.s}, {"kind", o.kind}, {"format", o.format}};
    if (o.key_bits) manifest.config["key_bits"] = *o.key_bits;

    std::vector<std::pair<std::size_t, double>> grid;
    for (auto n : o.n)
        for (double s : o.s) grid.emplace_back(n, s);
    std::vector<BoundRow> rows(grid.size());
    parallel_for(grid.size(), o.threads, [&](std::size_t i) { rows[i] = bound_row(o, grid[i].first, grid[i].second); });

    std::ostringstream body;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto &r : rows) {
            json j = {{"kind", o.kind}, {"n", r.n}, {"s", r.s}, {"status", r.status}};
            if (o.key_bits) j["key_bits"] = *o.key_bits;
            if (r.report) {
                j["bound"] = to_json(*r.report);
                j["log2_value"] = r.log2_value ? number_or_null(*r.log2_value) : json(nullptr);
            }
            if (r.below_guessing) j["below_guessing"] = *r.below_guessing;
            arr.push_back(j);
        }
        json doc = {{"rows", arr}};
        if (!o.out_dir.empty()) doc["manifest"] = kManifestName;
        body << dump(doc);
    } else {
        body << "kind,n,s,key_bits,quantity,method,value,log2_value,optimality_residual,below_guessing,status\n";
        for (const auto &r : rows) {
            body << o.kind << ',' << r.n << ',' << format_double(r.s) << ',' << (o.key_bits ? std::to_string(*o.key_bits) : "")
                 << ',';
            if (r.report) {
                body << to_string(r.report->kind) << ',' << to_string(r.report->method) << ','
                     << csv_number(r.report->value) << ',' << (r.log2_value ? csv_number(*r.log2_value) : "") << ','
                     << (r.report->optimality_residual ? csv_number(*r.report->optimality_residual) : "") << ',';
            } else {
                body << ",,,,,";
            }
            body << (r.below_guessing ? (*r.below_guessing ? "true" : "false") : "") << ',' << csv_quote(r.status) << '\n';
        }
    }

    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const BoundRow &r) { return r.status == "ok"; });
    if (o.out_dir.empty()) {
        out << body.str();
    } else {
        fs::create_directories(o.out_dir);
        const std::string name = std::string("bounds.") + (o.format == "json" ? "json" : "csv");
        write_text(fs::path(o.out_dir) / name, body.str());
        manifest.add_output(name, "bounds-table");
        write_text(fs::path(o.out_dir) / kManifestName, dump(manifest.finish()));
    }
    for (const auto &r : rows)
        if (r.status != "ok") err << "error: n=" << r.n << " s=" << format_double(r.s) << ": " << r.status << '\n';
    return all_ok ? 0 : 1;
}

// --- design -----------------------------------------------------------------

struct DesignOptions {
    double target = 0.0;
    double s = 0.0;
    std::string kind = "psk";
    std::optional<double> s_min;
    double kappa = 1.0;
    std::string format = "csv";
    std::string out_dir;
};

int cmd_design(const DesignOptions &o, const std::vector<std::string> &argv, std::ostream &out) {
    DesignRequest req;
    req.kind = o.kind == "ask" ? Modulation::ask : Modulation::psk;
    req.photons = o.s;
    req.transmissivity = o.kappa;
    if (req.kind == Modulation::ask) {
        if (!o.s_min) throw UsageError({"--s-min: required for --kind ask"});
        req.photons_min = *o.s_min;
    }
    unsigned m = 0;
    try {
        m = design_bases(o.target, req);
    } catch (const std::invalid_argument &e) {
        throw UsageError({e.what()});
    }
    const auto c = req.kind == Modulation::psk ? make_psk(m, o.s) : make_ask(m, req.photons_min, o.s, o.kappa);
    const double pe = neighbor_error(c);

    std::ostringstream body;
    if (o.format == "json") {
        json j = {{"kind", o.kind},      {"target", o.target}, {"photons", o.s}, {"transmissivity", o.kappa},
                  {"num_bases", m},      {"neighbor_error", pe}, {"neighbor_distance", c.neighbor_distance()}};
        if (o.s_min) j["photons_min"] = *o.s_min;
        if (!o.out_dir.empty()) j["manifest"] = kManifestName;
        body << dump(j);
    } else {
        body << "kind,target,photons,photons_min,transmissivity,num_bases,neighbor_error,neighbor_distance\n"
             << o.kind << ',' << format_double(o.target) << ',' << format_double(o.s) << ','
             << (o.s_min ? format_double(*o.s_min) : "") << ',' << format_double(o.kappa) << ',' << m << ','
             << format_double(pe) << ',' << format_double(c.neighbor_distance()) << '\n';
    }
    if (o.out_dir.empty()) {
        out << body.str();
        return 0;
    }
    Manifest manifest;
    manifest.command = "design";
    manifest.argv = argv;
    manifest.config = {{"target", o.target}, {"photons", o.s}, {"kind", o.kind}, {"transmissivity", o.kappa}};
    if (o.s_min) manifest.config["photons_min"] = *o.s_min;
    fs::create_directories(o.out_dir);
    const std::string name = std::string("design.") + (o.format == "json" ? "json" : "csv");
    write_text(fs::path(o.out_dir) / name, body.str());
    manifest.add_output(name, "design");
    write_text(fs::path(o.out_dir) / kManifestName, dump(manifest.finish()));
    return 0;
}

// --- simulate ---------------------------------------------------------------

struct SimulateJob {
    json config_snapshot; // {"cipher", "slots", "eve_transmissivity"}
    CipherConfig cipher;
    std::optional<std::size_t> slots;
    double eve_transmissivity = 1.0;
    std::uint64_t seed = 0;
    std::string plaintext = "random"; // zeros | random | absolute path
    std::vector<std::string> attacks;
    std::string key_path; // empty: derive from seed
    std::string stream_format = "binary";
};

SimulateJob parse_simulate_config(const json &j) {
    std::vector<std::string> issues;
    SimulateJob job;
    if (!j.is_object()) throw UsageError({"/: config must be a JSON object"});
    for (const auto &[key, _] : j.items())
        if (key != "cipher" && key != "slots" && key != "eve_transmissivity") issues.push_back("/" + key + ": unknown property");
    if (!j.contains("cipher")) {
        issues.push_back("/cipher: required");
    } else {
        try {
            job.cipher = parse_cipher_config(j.at("cipher"), "/cipher");
        } catch (const ConfigError &e) {
            issues.insert(issues.end(), e.issues().begin(), e.issues().end());
        } catch (const std::invalid_argument &e) {
            issues.push_back(std::string("/cipher: ") + e.what());
        }
    }
    if (j.contains("slots")) {
        const auto &v = j.at("slots");
        if (!v.is_number_integer() || v.get<long long>() <= 0)
            issues.push_back("/slots: must be a positive integer");
        else
            job.slots = v.get<std::size_t>();
    }
    if (j.contains("eve_transmissivity")) {
        const auto &v = j.at("eve_transmissivity");
        if (!v.is_number() || !(v.get<double>() > 0.0 && v.get<double>() <= 1.0))
            issues.push_back("/eve_transmissivity: must be a number in (0, 1]");
        else
            job.eve_transmissivity = v.get<double>();
    }
    if (!issues.empty()) throw UsageError(issues);
    job.config_snapshot = {{"cipher", to_json(job.cipher)}, {"eve_transmissivity", job.eve_transmissivity}};
    if (job.slots) job.config_snapshot["slots"] = *job.slots;
    return job;
}

json read_json_file(const fs::path &path) {
    std::ifstream f(path);
    if (!f) throw UsageError({"cannot open " + path.string()});
    try {
        return json::parse(f);
    } catch (const json::parse_error &e) {
        throw UsageError({path.string() + ": " + e.what()});
    }
}

Bits read_plaintext_file(const fs::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError({"--plaintext: cannot open " + path.string()});
    Bits bits;
    char c;
    while (f.get(c)) {
        if (c == '0' || c == '1')
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw UsageError({"--plaintext: " + path.string() + " must contain only '0', '1' and whitespace"});
    }
    return bits;
}

json report_body(json report) {
    report["manifest"] = kManifestName;
    return report;
}

int cmd_simulate(const SimulateJob &job, const fs::path &out_dir, unsigned threads, const std::vector<std::string> &argv,
                 std::ostream &out) {
    const auto &config = job.cipher;
    Manifest manifest;
    manifest.command = "simulate";
    manifest.argv = argv;
    manifest.seed = job.seed;
    fs::create_directories(out_dir);
    const auto fmt = parse_stream_format(job.stream_format);
    const std::string ext = fmt == StreamFormat::csv ? ".csv" : ".bin";

    // Key.
    SeedKey key = SeedKey::from_value(4, 1);
    json key_info;
    if (job.key_path.empty()) {
        key = derive_seed_key(config.key_bits, job.seed);
        write_key_file(out_dir / "key.bin", KeyFile{key, config.taps, config.osk ? config.osk_taps : TapPolynomial{}});
        manifest.add_output("key.bin", "key");
        key_info = {{"source", "derived"}};
    } else {
        const auto kf = read_key_file(job.key_path);
        if (kf.seed.bits() != config.key_bits) throw UsageError({"--key: key_bits does not match /cipher/key_bits"});
        if (!(kf.taps == config.taps)) throw UsageError({"--key: taps do not match /cipher/taps"});
        if (config.osk && !kf.osk_taps.empty() && !(kf.osk_taps == config.osk_taps))
            throw UsageError({"--key: osk_taps do not match /cipher/osk_taps"});
        key = kf.seed;
        key_info = {{"source", "file"}, {"path", job.key_path}};
    }

    // Plaintext.
    Bits plaintext;
    if (job.plaintext == "zeros" || job.plaintext == "random") {
        if (!job.slots) throw UsageError({"/slots: required unless --plaintext is a file"});
        plaintext = job.plaintext == "zeros" ? Bits(*job.slots, 0) : random_plaintext(*job.slots, job.seed);
    } else {
        plaintext = read_plaintext_file(job.plaintext);
        if (job.slots) {
            if (plaintext.size() < *job.slots)
                throw UsageError({"--plaintext: file holds " + std::to_string(plaintext.size()) + " bits, /slots asks for " +
                                  std::to_string(*job.slots)});
            plaintext.resize(*job.slots);
        }
        if (plaintext.empty()) throw UsageError({"--plaintext: file holds no bits"});
    }

    manifest.config = {{"simulation", job.config_snapshot},
                       {"plaintext", job.plaintext},
                       {"attacks", job.attacks},
                       {"key", key_info},
                       {"stream_format", job.stream_format}};

    // Transmit.
    StateSequence plain_stream;
    plain_stream.indices.assign(plaintext.begin(), plaintext.end());
    write_indices(out_dir / ("plaintext" + ext), plain_stream, fmt);
    manifest.add_output("plaintext" + ext, "plaintext-stream");

    const auto sequence = encode(plaintext, config, key);
    write_indices(out_dir / ("ciphertext" + ext), sequence, fmt);
    manifest.add_output("ciphertext" + ext, "ciphertext-stream");
    const auto constellation = config.constellation();
    const auto amplitudes = amplitudes_of(sequence, constellation);

    // Bob.
    const auto bob_record = bob_homodyne_record(amplitudes, config, key, job.seed, threads);
    write_record(out_dir / ("bob_record" + ext), bob_record, fmt);
    manifest.add_output("bob_record" + ext, "bob-record");
    const auto bob = bob_receive(bob_record, config, key, plaintext);
    const auto received = constellation.attenuated(config.transmissivity);
    const auto &p0 = received[0];
    const auto &p1 = received[config.num_bases];
    json bob_json = {
        {"receiver", "homodyne"},
        {"num_bases", config.num_bases},
        {"photons", config.photons},
        {"transmissivity", config.transmissivity},
        {"bit_error_rate", to_json(*bob.bit_error_rate)},
        {"helstrom_bound", to_json(helstrom_binary_pure(p0, p1))},
        {"homodyne_bound", to_json(quadrature_binary(p0, p1, Quadrature::homodyne))},
        {"seed", job.seed},
    };
    write_text(out_dir / "bob.json", dump(report_body(bob_json)));
    manifest.add_output("bob.json", "bob-report");

    // Eve.
    const auto eve_record = heterodyne_record(amplitudes, job.eve_transmissivity, job.seed, threads);
    write_record(out_dir / ("eve_record" + ext), eve_record, fmt);
    manifest.add_output("eve_record" + ext, "eve-record");

    std::optional<KeyPosterior> posterior;
    if (std::find(job.attacks.begin(), job.attacks.end(), "key-entropy") != job.attacks.end()) {
        if (config.key_bits > kMaxExhaustiveKeyBits)
            throw UsageError({"--attack key-entropy: key_bits must be <= " + std::to_string(kMaxExhaustiveKeyBits)});
        posterior = key_posterior_entropy(eve_record, config, plaintext, threads);
        json j = {
            {"attack", "key-entropy"},
            {"key_bits", config.key_bits},
            {"slots", plaintext.size()},
            {"posterior", to_json(*posterior)},
            {"map_seed_correct", key.bits() <= 64 && posterior->map_seed == key.words()[0]},
            {"seed", job.seed},
        };
        write_text(out_dir / "key_entropy.json", dump(report_body(j)));
        manifest.add_output("key_entropy.json", "attack-report");
    }
    for (const auto &attack : job.attacks) {
        std::optional<AttackReport> report;
        std::string name;
        if (attack == "ctoa-data") {
            report = eve_ctoa_data(eve_record, config, plaintext, threads);
            name = "ctoa_data.json";
        } else if (attack == "kpa") {
            report = eve_kpa_key_symbol(eve_record, config, key, plaintext, KeyTarget::known_plaintext, threads);
            name = "kpa_key.json";
        } else if (attack == "ctoa-key") {
            report = eve_kpa_key_symbol(eve_record, config, key, plaintext, KeyTarget::ciphertext_only, threads);
            name = "ctoa_key.json";
        }
        if (!report) continue;
        if (posterior && attack == "kpa") {
            report->key_posterior_entropy_bits = posterior->entropy_bits;
            report->log2_key_posterior_entropy_bits = posterior->log2_entropy_bits;
        }
        write_text(out_dir / name, dump(report_body(to_json(*report))));
        manifest.add_output(name, "attack-report");
    }

    write_text(out_dir / kManifestName, dump(manifest.finish()));
    out << "wrote " << manifest.outputs.size() << " outputs to " << out_dir.string() << "; Bob BER "
        << format_double(bob.bit_error_rate->rate) << '\n';
    return 0;
}

SimulateJob job_from_manifest(const fs::path &path) {
    const json m = read_json_file(path);
    if (m.value("command", "") != "simulate") throw UsageError({"--manifest: not a simulate manifest"});
    try {
        const auto &c = m.at("config");
        SimulateJob job = parse_simulate_config(c.at("simulation"));
        job.seed = m.at("seed").get<std::uint64_t>();
        job.plaintext = c.at("plaintext").get<std::string>();
        job.attacks = c.at("attacks").get<std::vector<std::string>>();
        job.stream_format = c.at("stream_format").get<std::string>();
        const auto &k = c.at("key");
        if (k.at("source") == "file") job.key_path = k.at("path").get<std::string>();
        return job;
    } catch (const json::exception &e) {
        throw UsageError({"--manifest: " + std::string(e.what())});
    }
}

// --- reproduce --------------------------------------------------------------

int cmd_reproduce(const std::vector<int> &only, const claims::ClaimOptions &options, const std::string &out_dir,
                  const std::vector<std::string> &argv, std::ostream &out) {
    std::vector<int> ids = only;
    if (ids.empty())
        for (int i = 1; i <= claims::kClaimCount; ++i) ids.push_back(i);
    for (int id : ids)
        if (id < 1 || id > claims::kClaimCount) throw UsageError({"--claim: no claim " + std::to_string(id)});
    std::vector<claims::ClaimResult> results;
    for (int id : ids) {
        results.push_back(claims::run_claim(id, options));
        out << claims::format_line(results.back()) << '\n';
        for (const auto &note : results.back().notes) out << "    note: " << note << '\n';
        out.flush();
    }
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto &r) { return !r.pass; });
    out << (results.size() - static_cast<std::size_t>(failed)) << '/' << results.size() << " claims passed\n";
    if (!out_dir.empty()) {
        Manifest manifest;
    manifest.command = "reproduce";
        manifest.argv = argv;
        manifest.seed = options.seed;
        manifest.config = {{"claims", ids}};
        json arr = json::array();
        for (const auto &r : results) arr.push_back(claims::to_json(r));
        fs::create_directories(out_dir);
        write_text(fs::path(out_dir) / "reproduce.json", dump({{"claims", arr}, {"manifest", kManifestName}}));
        manifest.add_output("reproduce.json", "claims");
        write_text(fs::path(out_dir) / kManifestName, dump(manifest.finish()));
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Y-00 quantum stream cipher simulator: bounds, simulation, design, reproduction", "y00sim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(Y00_VERSION));
    const std::vector<std::string> argv_copy(argv, argv + argc);

    BoundsOptions bo;
    auto *bounds = app.add_subcommand("bounds", "Tabulate detection bounds over an (N, S) grid");
    bounds->add_option("--n", bo.n, "Number of symmetric states (list)")->required()->delimiter(',');
    bounds->add_option("--s", bo.s, "Mean photon number (list)")->required()->delimiter(',');
    bounds->add_option("--kind", bo.kind, "Bound to compute")
        ->check(CLI::IsMember({"srm", "usd", "helstrom", "homodyne", "heterodyne", "collective-usd"}));
    bounds->add_option("--key-bits", bo.key_bits, "Key length for collective-usd");
    bounds->add_option("--format", bo.format)->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bo.out_dir, "Write table and manifest to DIR");
    bounds->add_option("--threads", bo.threads, "Worker threads (0 = all cores)");

    std::string config_path, manifest_path, sim_out = ".", plaintext_src = "random", key_path;
    std::string stream_format = "binary";
    std::optional<std::uint64_t> seed;
    std::vector<std::string> attacks;
    unsigned sim_threads = 0;
    auto *simulate = app.add_subcommand("simulate", "Encrypt, transmit, receive and attack one run");
    simulate->add_option("--config", config_path, "Simulation config (JSON)");
    simulate->add_option("--manifest", manifest_path, "Rerun from an earlier manifest.json");
    simulate->add_option("--seed", seed, "Master RNG seed (required unless --manifest)");
    simulate->add_option("--plaintext", plaintext_src, "zeros, random, or a file of 0/1 characters");
    simulate->add_option("--attack", attacks, "Attacks to run")
        ->check(CLI::IsMember({"none", "ctoa-data", "kpa", "ctoa-key", "key-entropy"}))
        ->delimiter(',');
    simulate->add_option("--key", key_path, "Key file; derived from --seed when absent");
    simulate->add_option("--out", sim_out, "Output directory");
    simulate->add_option("--format", stream_format, "Stream and record file format")
        ->check(CLI::IsMember({"binary", "csv"}));
    simulate->add_option("--threads", sim_threads, "Worker threads (0 = all cores)");

    DesignOptions dopt;
    auto *design = app.add_subcommand("design", "Smallest number of bases reaching a neighbor error target");
    design->add_option("--target", dopt.target, "Target neighbor error in [0.2, 0.5)")->required();
    design->add_option("--s", dopt.s, "Photon number (S_max for ask)")->required();
    design->add_option("--kind", dopt.kind)->check(CLI::IsMember({"psk", "ask"}));
    design->add_option("--s-min", dopt.s_min, "Smallest ASK photon number");
    design->add_option("--kappa", dopt.kappa, "Channel transmissivity");
    design->add_option("--format", dopt.format)->check(CLI::IsMember({"csv", "json"}));
    design->add_option("--out", dopt.out_dir);

    std::vector<int> only;
    claims::ClaimOptions copt;
    std::string rep_out;
    auto *reproduce = app.add_subcommand("reproduce", "Run every acceptance claim and report pass/fail");
    reproduce->add_option("--claim", only, "Run only these claims")->delimiter(',');
    reproduce->add_option("--seed", copt.seed, "Monte Carlo seed");
    reproduce->add_option("--threads", copt.threads, "Worker threads (0 = all cores)");
    reproduce->add_option("--out", rep_out, "Write reproduce.json and manifest to DIR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bounds) return cmd_bounds(bo, argv_copy, out, err);
        if (*design) return cmd_design(dopt, argv_copy, out);
        if (*reproduce) return cmd_reproduce(only, copt, rep_out, argv_copy, out);
        if (*simulate) {
            SimulateJob job;
            if (!manifest_path.empty()) {
                if (!config_path.empty() || seed) throw UsageError({"--manifest: cannot be combined with --config or --seed"});
                job = job_from_manifest(manifest_path);
            } else {
                std::vector<std::string> issues;
                if (config_path.empty()) issues.push_back("--config: required");
                if (!seed) issues.push_back("--seed: required (all randomness derives from it)");
                if (!issues.empty()) throw UsageError(issues);
                job = parse_simulate_config(read_json_file(config_path));
                job.seed = *seed;
                job.plaintext = plaintext_src;
                if (plaintext_src != "zeros" && plaintext_src != "random")
                    job.plaintext = fs::absolute(plaintext_src).lexically_normal().string();
                if (!key_path.empty()) job.key_path = fs::absolute(key_path).lexically_normal().string();
                for (const auto &a : attacks)
                    if (a != "none" && std::find(job.attacks.begin(), job.attacks.end(), a) == job.attacks.end())
                        job.attacks.push_back(a);
                job.stream_format = stream_format;
            }
            return cmd_simulate(job, sim_out, sim_threads, argv_copy, out);
        }
    } catch (const UsageError &e) {
        for (const auto &issue : e.issues()) err << "error: " << issue << '\n';
        return 2;
    } catch (const ConfigError &e) {
        for (const auto &issue : e.issues()) err << "error: " << issue << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace y00::cli

// Copyright 2026 The qns Authors
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

// qns: build, verify and simulate recursive noiseless-subsystem encoders.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qns/qns.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::int64_t memory_cap_from_env() {
    if (const char* v = std::getenv("QNS_MEMORY_CAP")) {
        try {
            const long long cap = std::stoll(v);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        throw qns::DomainError(std::string("QNS_MEMORY_CAP must be a positive integer, got '") + v + "'");
    }
    return qns::kDefaultMemoryCap;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

void emit_json(qns::json j, const std::string& path) {
    j["timestamp"] = utc_timestamp();
    emit(j.dump(2) + "\n", path);
}

struct Options {
    int d = 2;
    int k = 1;
    int kmax = 10;
    int trials = 100;
    std::uint64_t seed = 2024;
    std::string noise = "su";
    std::optional<double> tol;
    std::string output;
    std::string format = "csv";
    std::string encoder_path;
    bool reference = false;
};

qns::EncoderSpec load_or_build(const Options& o, std::int64_t cap) {
    if (o.reference) {
        if (o.d != 2) throw qns::DomainError("--reference is only available for d = 2");
        return qns::reference_encoder_d2();
    }
    if (!o.encoder_path.empty()) {
        std::ifstream in(o.encoder_path);
        if (!in) throw std::runtime_error("cannot open '" + o.encoder_path + "'");
        auto enc = qns::encoder_from_json(qns::json::parse(in));
        if (enc.d != o.d) throw qns::DomainError("encoder file has d = " + std::to_string(enc.d));
        return enc;
    }
    return qns::build_encoder(o.d, o.seed, cap);
}

int run_build_encoder(const Options& o, std::int64_t cap) {
    emit_json(qns::encoder_to_json(qns::build_encoder(o.d, o.seed, cap)), o.output);
    return kExitOk;
}

int run_export_reference(const Options& o) {
    emit_json(qns::encoder_to_json(qns::reference_encoder_d2()), o.output);
    return kExitOk;
}

int run_verify(const Options& o, std::int64_t cap) {
    const double tol = o.tol.value_or(qns::kVerificationTol);
    const auto enc = load_or_build(o, cap);
    qns::Rng rng(qns::derive_seed(o.seed, 0x7665726966ULL));

    double worst_ns = 0.0, worst_off = 0.0;
    int failures = 0;
    qns::json failed = qns::json::array();
    for (int t = 0; t < o.trials; ++t) {
        const auto w = qns::random_special_unitary(o.d, rng);
        const auto r = qns::verify_block_structure(enc, w.matrix(), tol);
        worst_ns = std::max(worst_ns, r.residual_ns);
        worst_off = std::max(worst_off, r.residual_offdiag);
        if (!r.passed) {
            ++failures;
            if (failed.size() < 5) {
                qns::json entry = qns::block_report_to_json(r);
                entry["trial"] = t;
                failed.push_back(std::move(entry));
            }
        }
    }
    const double unitarity = qns::unitarity_residual(enc.u_e.matrix());
    const bool passed = failures == 0 && unitarity < tol;

    qns::json j = {{"command", "verify"},       {"d", o.d},
                   {"generator", enc.generator}, {"trials", o.trials},
                   {"seed", o.seed},             {"tol", tol},
                   {"unitarity_residual", unitarity},
                   {"max_residual_ns", worst_ns}, {"max_residual_offdiag", worst_off},
                   {"failures", failures},        {"failed_samples", failed},
                   {"passed", passed}};
    emit_json(j, o.output);
    if (!passed) {
        std::cerr << "verify: " << failures << "/" << o.trials << " samples failed at tol " << tol
                  << " (max residual_ns " << worst_ns << ", max residual_offdiag " << worst_off
                  << ", unitarity " << unitarity << ")\n";
    }
    return passed ? kExitOk : kExitCheckFailed;
}

int run_simulate(const Options& o, std::int64_t cap) {
    const auto kind = o.noise == "sl" ? qns::NoiseKind::SL : qns::NoiseKind::HaarSU;
    const double tol = o.tol.value_or(kind == qns::NoiseKind::SL ? 1e-8 : qns::kVerificationTol);
    const auto code = qns::make_code(o.d, o.k, load_or_build(o, cap), cap);
    const auto rep = qns::simulate(code, {kind, o.seed}, o.trials);
    const bool passed = rep.max_infidelity < tol && rep.max_state_residual < tol;

    qns::json j = qns::report_to_json(rep);
    j["command"] = "simulate";
    j["tol"] = tol;
    j["passed"] = passed;
    emit_json(j, o.output);
    if (!passed) {
        std::cerr << "simulate: max infidelity " << rep.max_infidelity << ", max state residual "
                  << rep.max_state_residual << " at tol " << tol << "\n";
    }
    return passed ? kExitOk : kExitCheckFailed;
}

int run_rate_table(const Options& o) {
    const auto rows = qns::rate_table(o.d, o.kmax);
    bool passed = true;
    for (const auto& r : rows) {
        const double gap = std::abs(boost::rational_cast<double>(r.rate) - 1.0 / r.d);
        passed = passed && gap < 1.0 / (static_cast<double>(r.k) * r.d);
    }
    if (o.format == "json") {
        emit_json({{"command", "rate-table"}, {"rows", qns::rate_table_json(rows)}}, o.output);
    } else {
        emit(qns::rate_table_csv(rows), o.output);
    }
    return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive noiseless-subsystem encoders for qudits under collective noise"};
    app.require_subcommand(1);
    Options o;

    auto add_d = [&](CLI::App* sub) { sub->add_option("--d", o.d, "Qudit dimension")->check(CLI::Range(2, 16)); };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Master seed for all randomness"); };
    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Output file (default stdout)"); };
    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", o.tol, "Pass/fail tolerance")->check(CLI::PositiveNumber);
    };
    auto add_source = [&](CLI::App* sub) {
        auto* ref = sub->add_flag("--reference", o.reference, "Use the hand-written d = 2 encoder");
        sub->add_option("--encoder", o.encoder_path, "Load the encoder from a JSON file")
            ->check(CLI::ExistingFile)
            ->excludes(ref);
    };

    auto* build = app.add_subcommand("build-encoder", "Build U_E and write it as JSON");
    add_d(build);
    add_seed(build);
    add_output(build);

    auto* verify = app.add_subcommand("verify", "Check the block form of U_E^dagger W^(d+1) U_E on Haar samples");
    add_d(verify);
    add_seed(verify);
    add_output(verify);
    add_tol(verify);
    add_source(verify);
    verify->add_option("--trials", o.trials, "Number of Haar samples")->check(CLI::PositiveNumber);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo encode / collective noise / decode");
    add_d(sim);
    add_seed(sim);
    add_output(sim);
    add_tol(sim);
    add_source(sim);
    sim->add_option("--k", o.k, "Number of protected qudits")->check(CLI::PositiveNumber);
    sim->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    sim->add_option("--noise", o.noise, "su: Haar SU(d); sl: SL(d,C)")->check(CLI::IsMember({"su", "sl"}));

    auto* rate = app.add_subcommand("rate-table", "Encoding rate k/(kd+1) for k = 1..kmax");
    add_d(rate);
    add_output(rate);
    rate->add_option("--kmax", o.kmax, "Largest k")->check(CLI::PositiveNumber);
    rate->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* ref = app.add_subcommand("export-reference", "Write the hand-written d = 2 encoder as JSON");
    add_output(ref);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const std::int64_t cap = memory_cap_from_env();
        if (*build) return run_build_encoder(o, cap);
        if (*verify) return run_verify(o, cap);
        if (*sim) return run_simulate(o, cap);
        if (*rate) return run_rate_table(o);
        if (*ref) return run_export_reference(o);
    } catch (const qns::InvalidDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qns::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qns::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

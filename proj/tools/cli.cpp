// Copyright 2026 The minwit Authors
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


#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "minwit/errors.h"
#include "minwit/evaluator.h"
#include "minwit/io.h"
#include "minwit/oracle.h"
#include "minwit/pauli.h"
#include "minwit/state.h"
#include "minwit/witness.h"

namespace minwit::cli {
namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view s, std::string_view what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ArgumentError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<MeasurementSetting> parse_settings(const std::string &text, std::size_t n) {
    std::vector<MeasurementSetting> settings;
    for (const auto &s : split_list(text)) {
        auto m = MeasurementSetting::from_digits(s);
        if (m.num_qubits() != n) {
            throw ArgumentError("setting " + s + " does not have " + std::to_string(n) + " sites");
        }
        settings.push_back(m);
    }
    if (settings.empty()) {
        throw ArgumentError("no measurement settings given");
    }
    return settings;
}

void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        if (!text.empty() && text.back() != '\n') {
            out << '\n';
        }
    } else {
        write_text_file(path, text);
    }
}

bool ends_with(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

struct StateArgs {
    std::string family;
    std::size_t n = 4;
    int excitations = -1;
    std::string theta = "0";
    std::string phi = "0";

    void attach(CLI::App *cmd, bool family_required) {
        auto *opt = cmd->add_option("--state", family, "State family: ghz, cluster4, cluster, dicke, w, singlet, psi");
        if (family_required) {
            opt->required();
        }
        cmd->add_option("--n", n, "Number of qubits")->capture_default_str();
        cmd->add_option("--excitations", excitations, "Dicke excitation number (default n/2)");
        cmd->add_option("--theta", theta, "Psi family angle theta (accepts pi fractions)")->capture_default_str();
        cmd->add_option("--phi", phi, "Psi family phase phi (accepts pi fractions)")->capture_default_str();
    }

    StateParams params() const {
        StateParams p;
        if (excitations >= 0) {
            p.excitations = excitations;
        }
        p.theta = parse_angle(theta);
        p.phi = parse_angle(phi);
        return p;
    }
};

struct BuildArgs {
    StateArgs state;
    std::string settings = "auto";
    std::string out;
    std::string id;
    bool named = false;
    bool closed_form = false;
    bool no_cut_criteria = false;
};

std::optional<NamedFamily> named_for(StateFamily family, std::size_t n) {
    if (n != 4) {
        return std::nullopt;
    }
    switch (family) {
        case StateFamily::kGhz:
            return NamedFamily::kGhz4;
        case StateFamily::kCluster4:
        case StateFamily::kClusterStabilizer:
            return NamedFamily::kCluster4;
        case StateFamily::kDicke:
            return NamedFamily::kDicke42;
        case StateFamily::kSinglet4:
            return NamedFamily::kSinglet4;
        case StateFamily::kW:
            return NamedFamily::kW4;
        default:
            return std::nullopt;
    }
}

int run_build(const BuildArgs &a, std::ostream &out) {
    StateFamily family = parse_state_family(a.state.family);
    std::size_t n = a.state.n;
    WitnessSpec w;
    if (a.named) {
        auto nf = named_for(family, n);
        if (!nf) {
            throw ArgumentError("--named needs one of ghz, cluster4, dicke, singlet, w at n = 4");
        }
        auto nc = named_criteria(*nf);
        if (!nc.combined) {
            throw ConstructionError(named_family_name(*nf) + " has per-cut criteria only; no combined witness");
        }
        w = *nc.combined;
    } else if (a.closed_form) {
        if (family == StateFamily::kGhz) {
            w = nqubit_ghz_witness(n, !a.no_cut_criteria);
        } else if (family == StateFamily::kCluster4 || family == StateFamily::kClusterStabilizer) {
            w = nqubit_cluster_witness(n);
        } else {
            throw ArgumentError("--closed-form is available for ghz and cluster only");
        }
    } else {
        StateVector psi = make_state(family, n, a.state.params());
        CorrelationSet corrs = nonvanishing_correlations(psi);
        corrs.metadata["family"] = family_name(family);
        std::vector<MeasurementSetting> settings =
            a.settings == "auto" ? propose_settings(corrs) : parse_settings(a.settings, n);
        BuildOptions opts;
        opts.id = a.id.empty() ? family_name(family) + std::to_string(n) : a.id;
        opts.with_cut_criteria = !a.no_cut_criteria;
        w = build_combined_witness(corrs, settings, opts);
        if (family == StateFamily::kPsi) {
            w.metadata["theta"] = a.state.theta;
            w.metadata["phi"] = a.state.phi;
        }
    }
    if (!a.id.empty()) {
        w.id = a.id;
    }
    emit(a.out, witness_to_json(w), out);
    if (!a.out.empty()) {
        out << "witness " << w.id << ": " << w.operators.size() << " operators, G0 = " << rational_to_string(w.g0)
            << ", G = " << rational_to_string(w.g) << ", threshold " << rational_to_string(w.threshold()) << " ("
            << fmt(to_double(w.threshold())) << ")\n";
    }
    return kOk;
}

struct EvalArgs {
    std::string witness;
    std::string correlations;
    std::string counts;
    std::string report;
};

int run_eval(const EvalArgs &a, std::ostream &out) {
    if (a.correlations.empty() && a.counts.empty()) {
        throw ArgumentError("eval needs --correlations and/or --counts");
    }
    WitnessSpec w = witness_from_json(read_text_file(a.witness));
    std::optional<CorrelationSet> corrs;
    if (!a.correlations.empty()) {
        corrs = parse_correlations(a.correlations);
    }
    if (!a.counts.empty()) {
        CorrelationSet from_counts = correlations_from_counts(read_counts_json(read_text_file(a.counts)));
        if (!corrs) {
            corrs = std::move(from_counts);
        } else {
            if (from_counts.num_qubits() != corrs->num_qubits()) {
                throw DimensionError("counts and correlations disagree on qubit count");
            }
            // Tabulated values take precedence; counts fill the gaps.
            for (const auto &[p, c] : from_counts.entries()) {
                if (!corrs->contains(p)) {
                    corrs->set(p, c.value, c.error);
                }
            }
        }
    }
    EvaluationReport rep = evaluate(w, *corrs);
    emit(a.report, report_to_json(rep), out);
    if (!a.report.empty()) {
        out << "witness " << rep.witness_id << ": value " << fmt(rep.value) << " +- " << fmt(rep.error, 3)
            << " vs threshold " << rep.threshold_exact << " (" << fmt(rep.threshold) << "), significance "
            << fmt(rep.significance, 4) << " sd\n";
        for (const auto &c : rep.per_cut) {
            out << "  " << std::left << std::setw(8) << c.cut.str() << std::right;
            if (!c.available) {
                out << " unavailable\n";
                continue;
            }
            out << " " << fmt(c.value) << " +- " << fmt(c.error, 3) << "  " << fmt(c.significance, 4) << " sd"
                << (c.violated ? "  violated" : "") << '\n';
        }
        out << "verdict: " << verdict_name(rep.verdict) << '\n';
    }
    return rep.verdict == Verdict::kGenuineMultipartite ? kOk : kNotDetected;
}

struct SimulateArgs {
    StateArgs state;
    double noise_p = 1.0;
    std::string settings;
    std::int64_t shots = 4000;
    std::uint64_t seed = 1;
    std::string out;
};

// Decorrelates per-setting seeds drawn from one user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int run_simulate(const SimulateArgs &a, std::ostream &out) {
    StateFamily family = parse_state_family(a.state.family);
    StateVector psi = make_state(family, a.state.n, a.state.params());
    DensityMatrix rho = add_white_noise(psi, a.noise_p);
    auto settings = parse_settings(a.settings, a.state.n);
    std::vector<CountsRecord> records;
    for (std::size_t k = 0; k < settings.size(); ++k) {
        records.push_back(simulate_counts(rho, settings[k], a.shots, mix_seed(a.seed, k)));
    }
    emit(a.out, write_counts_json(records), out);
    if (!a.out.empty()) {
        out << "simulated " << records.size() << " setting(s) x " << a.shots << " shots\n";
    }
    return kOk;
}

struct SweepArgs {
    std::string phi = "pi";
    std::size_t steps = 13;
    double noise_p = 1.0;
    double fidelity = -1;
    std::string out;
};

int run_sweep(const SweepArgs &a, std::ostream &out) {
    if (a.steps < 2) {
        throw ArgumentError("--steps must be at least 2");
    }
    double p = a.fidelity >= 0 ? noise_for_fidelity(a.fidelity, 4) : a.noise_p;
    auto points = theta_sweep(parse_angle(a.phi), sweep_grid(a.steps), {p});
    std::string text = ends_with(a.out, ".json") ? sweep_to_json(points) : sweep_to_csv(points);
    emit(a.out, text, out);
    return kOk;
}

struct VerifyArgs {
    std::string witness;
    std::size_t samples = 100000;
    std::uint64_t seed = 20130101;
    std::size_t restarts = 12;
    std::size_t threads = 0;
    std::string report;
};

bool pairwise_commuting(const std::vector<PauliString> &ops) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!commutes(ops[i], ops[j])) {
                return false;
            }
        }
    }
    return true;
}

int run_verify(const VerifyArgs &a, std::ostream &out) {
    WitnessSpec w = witness_from_json(read_text_file(a.witness));
    OracleOptions opts;
    opts.trials = a.samples;
    opts.seed = a.seed;
    opts.restarts = a.restarts;
    opts.threads = a.threads;

    std::vector<OracleReport> reports;
    reports.push_back(check_witness_threshold(w, opts));

    std::size_t n = w.num_qubits;
    std::vector<PauliString> local_triple;
    for (int d = 1; d <= 3; ++d) {
        std::string digits(n, '0');
        digits[0] = static_cast<char>('0' + d);
        local_triple.push_back(PauliString::from_digits(digits));
    }
    reports.push_back(check_anticommuting_bound(local_triple, opts));

    for (const auto &c : w.per_cut_criteria) {
        if (!c.available) {
            continue;
        }
        for (const auto &p : c.class_a) {
            auto it = std::find_if(c.class_b.begin(), c.class_b.end(),
                                   [&](const PauliString &q) { return cut_anticommutes(p, q, c.cut); });
            if (it != c.class_b.end()) {
                OracleReport r = check_biseparable_bound(p, *it, c.cut, opts);
                r.suite += ":" + c.cut.str();
                reports.push_back(std::move(r));
                break;
            }
        }
    }

    if (n <= 6 && pairwise_commuting(w.operators)) {
        reports.push_back(check_commuting_saturation(w.operators, opts));
    }

    bool all_pass = true;
    out << std::left << std::setw(34) << "suite" << std::right << std::setw(10) << "trials" << std::setw(14)
        << "max" << std::setw(14) << "bound" << std::setw(14) << "margin" << "  result\n";
    for (const auto &r : reports) {
        all_pass = all_pass && r.pass;
        out << std::left << std::setw(34) << r.suite << std::right << std::setw(10) << r.trials << std::setw(14)
            << fmt(r.max_observed, 9) << std::setw(14) << fmt(r.bound, 9) << std::setw(14) << fmt(r.margin, 3)
            << "  " << (r.pass ? "pass" : "FAIL") << '\n';
    }
    if (!a.report.empty()) {
        write_text_file(a.report, oracle_reports_to_json(reports));
    }
    return all_pass ? kOk : kNotDetected;
}

}  // namespace

double parse_angle(std::string_view raw) {
    std::string text = trim(raw);
    std::string lower;
    for (char c : text) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    auto pos = lower.find("pi");
    if (pos == std::string::npos) {
        return parse_real(lower, "angle");
    }
    std::string coeff = lower.substr(0, pos);
    std::string rest = lower.substr(pos + 2);
    if (!coeff.empty() && coeff.back() == '*') {
        coeff.pop_back();
    }
    double c = 1.0;
    if (coeff == "-") {
        c = -1.0;
    } else if (coeff == "+") {
        c = 1.0;
    } else if (!coeff.empty()) {
        c = parse_real(coeff, "angle");
    }
    double d = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ArgumentError("invalid angle: '" + text + "'");
        }
        d = parse_real(rest.substr(1), "angle");
        if (d == 0) {
            throw ArgumentError("invalid angle: '" + text + "'");
        }
    }
    return c * std::numbers::pi / d;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimal-effort multipartite entanglement witnesses", "minwit"};
    app.require_subcommand(1);

    BuildArgs build;
    auto *cmd_build = app.add_subcommand("build", "Construct a witness for a target state");
    build.state.attach(cmd_build, true);
    cmd_build->add_option("--settings", build.settings, "Comma-separated settings, or 'auto'")->capture_default_str();
    cmd_build->add_option("--out", build.out, "Witness JSON output (stdout when omitted)");
    cmd_build->add_option("--id", build.id, "Witness identifier");
    auto *named_flag = cmd_build->add_flag("--named", build.named, "Use the tabulated four-qubit witness");
    cmd_build->add_flag("--closed-form", build.closed_form, "Use the N-qubit GHZ / cluster family witness")
        ->excludes(named_flag);
    cmd_build->add_flag("--no-cut-criteria", build.no_cut_criteria, "Skip per-cut criteria");

    EvalArgs eval;
    auto *cmd_eval = app.add_subcommand("eval", "Evaluate a witness on correlation data");
    cmd_eval->add_option("--witness", eval.witness, "Witness JSON")->required();
    cmd_eval->add_option("--correlations", eval.correlations, "Correlation CSV or JSON");
    cmd_eval->add_option("--counts", eval.counts, "Counts JSON");
    cmd_eval->add_option("--report", eval.report, "Report JSON output (stdout when omitted)");

    SimulateArgs sim;
    auto *cmd_sim = app.add_subcommand("simulate", "Sample measurement counts from a noisy target state");
    sim.state.attach(cmd_sim, true);
    cmd_sim->add_option("--noise-p", sim.noise_p, "White-noise visibility p")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd_sim->add_option("--settings", sim.settings, "Comma-separated settings")->required();
    cmd_sim->add_option("--shots", sim.shots, "Shots per setting")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sim->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
    cmd_sim->add_option("--out", sim.out, "Counts JSON output (stdout when omitted)");

    SweepArgs sweep;
    auto *cmd_sweep = app.add_subcommand("sweep", "GHZ and cluster witnesses along the Psi(theta, phi) family");
    cmd_sweep->add_option("--phi", sweep.phi, "Phase phi (accepts pi fractions)")->capture_default_str();
    cmd_sweep->add_option("--steps", sweep.steps, "Grid points from 0 to pi/4")->capture_default_str();
    auto *p_opt = cmd_sweep->add_option("--noise-p", sweep.noise_p, "White-noise visibility p")
                      ->check(CLI::Range(0.0, 1.0))
                      ->capture_default_str();
    cmd_sweep->add_option("--fidelity", sweep.fidelity, "Target fidelity (sets p)")
        ->check(CLI::Range(1.0 / 16, 1.0))
        ->excludes(p_opt);
    cmd_sweep->add_option("--out", sweep.out, "CSV output, or JSON when the name ends in .json");

    VerifyArgs verify;
    auto *cmd_verify = app.add_subcommand("verify", "Run the randomized bound checks on a witness");
    cmd_verify->add_option("--witness", verify.witness, "Witness JSON")->required();
    cmd_verify->add_option("--samples", verify.samples, "Samples per configuration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_verify->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
    cmd_verify->add_option("--restarts", verify.restarts, "Local refinement restarts")->capture_default_str();
    cmd_verify->add_option("--threads", verify.threads, "Worker threads (0 = hardware)")->capture_default_str();
    cmd_verify->add_option("--report", verify.report, "Oracle report JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "minwit: " << e.what() << "\n" << "run 'minwit --help' for usage\n";
        return kUsage;
    }

    try {
        if (cmd_build->parsed()) {
            return run_build(build, out);
        }
        if (cmd_eval->parsed()) {
            return run_eval(eval, out);
        }
        if (cmd_sim->parsed()) {
            return run_simulate(sim, out);
        }
        if (cmd_sweep->parsed()) {
            return run_sweep(sweep, out);
        }
        return run_verify(verify, out);
    } catch (const ArgumentError &e) {
        err << "minwit: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "minwit: " << e.what() << '\n';
        return kDataError;
    }
}

}  // namespace minwit::cli

int cli_main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return minwit::cli::run(args, std::cout, std::cerr);
}

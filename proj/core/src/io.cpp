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

#include "minwit/io.h"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "minwit/errors.h"

namespace minwit {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string fmt(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(trim(cur));
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string &s, std::size_t line, const char *what) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
    }
    return v;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
}

template <typename T>
T field(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'", 0);
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what(), 0);
    }
}

ordered significance_json(double s) {
    if (std::isinf(s)) {
        return s > 0 ? "+inf" : "-inf";
    }
    return s;
}

ordered metadata_json(const std::map<std::string, std::string> &m) {
    ordered out = ordered::object();
    for (const auto &[k, v] : m) {
        out[k] = v;
    }
    return out;
}

std::vector<std::string> op_names(const std::vector<PauliString> &ops) {
    std::vector<std::string> out;
    for (const auto &p : ops) {
        out.push_back(p.str());
    }
    return out;
}

std::vector<PauliString> ops_from(const json &arr) {
    std::vector<PauliString> out;
    for (const auto &s : arr) {
        out.push_back(PauliString::from_digits(s.get<std::string>()));
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw DataError("write to '" + path + "' failed");
    }
}

CorrelationSet read_correlations_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    std::map<std::string, std::string> meta;
    bool header = false;
    bool has_stderr = true;
    std::optional<CorrelationSet> out;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty()) {
            continue;
        }
        if (s[0] == '#') {
            auto body = trim(std::string_view(s).substr(1));
            auto colon = body.find(':');
            if (colon != std::string::npos) {
                meta[trim(std::string_view(body).substr(0, colon))] = trim(std::string_view(body).substr(colon + 1));
            }
            continue;
        }
        if (!header) {
            auto cols = split(s, ',');
            if (cols == std::vector<std::string>{"index", "value", "stderr"}) {
                has_stderr = true;
            } else if (cols == std::vector<std::string>{"index", "value"}) {
                has_stderr = false;
            } else {
                throw ParseError("expected header 'index,value,stderr'", line);
            }
            header = true;
            if (meta.count("n_qubits")) {
                n = static_cast<std::size_t>(parse_double(meta["n_qubits"], line, "n_qubits"));
            }
            continue;
        }
        auto cols = split(s, ',');
        if (cols.size() != (has_stderr ? 3u : 2u)) {
            throw ParseError("expected " + std::to_string(has_stderr ? 3 : 2) + " columns", line);
        }
        PauliString p;
        try {
            p = PauliString::from_digits(cols[0]);
        } catch (const std::exception &) {
            throw ParseError("bad operator index '" + cols[0] + "'", line);
        }
        if (n == 0) {
            n = p.num_qubits();
        }
        if (p.num_qubits() != n) {
            throw ParseError("operator '" + cols[0] + "' does not have " + std::to_string(n) + " digits", line);
        }
        if (!out) {
            out.emplace(n);
        }
        double value = parse_double(cols[1], line, "value");
        double err = has_stderr ? parse_double(cols[2], line, "stderr") : 0.0;
        try {
            out->set(p, value, err);
        } catch (const ValidationError &e) {
            throw ValidationError("line " + std::to_string(line) + ": " + e.what());
        }
    }
    if (!header) {
        throw ParseError("empty correlation file", line);
    }
    if (!out) {
        if (n == 0) {
            throw ParseError("correlation file has no rows", line);
        }
        out.emplace(n);
    }
    out->metadata = meta;
    out->metadata.erase("n_qubits");
    return *out;
}

std::string write_correlations_csv(const CorrelationSet &corrs) {
    std::ostringstream out;
    out << "# n_qubits: " << corrs.num_qubits() << "\n";
    for (const auto &[k, v] : corrs.metadata) {
        out << "# " << k << ": " << v << "\n";
    }
    out << "index,value,stderr\n";
    for (const auto &[p, c] : corrs.entries()) {
        out << p.str() << "," << fmt(c.value) << "," << fmt(c.error) << "\n";
    }
    return out.str();
}

CorrelationSet read_correlations_json(std::string_view text) {
    json j = parse_json(text);
    auto n = field<std::size_t>(j, "n_qubits");
    CorrelationSet out(n);
    for (const auto &e : field<json>(j, "entries")) {
        auto p = PauliString::from_digits(field<std::string>(e, "index"));
        if (p.num_qubits() != n) {
            throw ParseError("operator " + p.str() + " has wrong length", 0);
        }
        out.set(p, field<double>(e, "value"), e.contains("stderr") ? field<double>(e, "stderr") : 0.0);
    }
    if (j.contains("metadata")) {
        for (const auto &[k, v] : j["metadata"].items()) {
            out.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    return out;
}

std::string write_correlations_json(const CorrelationSet &corrs) {
    ordered j;
    j["n_qubits"] = corrs.num_qubits();
    j["entries"] = ordered::array();
    for (const auto &[p, c] : corrs.entries()) {
        j["entries"].push_back({{"index", p.str()}, {"value", c.value}, {"stderr", c.error}});
    }
    j["metadata"] = metadata_json(corrs.metadata);
    return j.dump(2) + "\n";
}

CorrelationSet parse_correlations(const std::string &path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return read_correlations_json(text);
    }
    return read_correlations_csv(text);
}

void write_correlations(const CorrelationSet &corrs, const std::string &path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        write_text_file(path, write_correlations_json(corrs));
    } else {
        write_text_file(path, write_correlations_csv(corrs));
    }
}

std::vector<CountsRecord> read_counts_json(std::string_view text) {
    json j = parse_json(text);
    std::vector<json> items;
    if (j.is_array()) {
        items.assign(j.begin(), j.end());
    } else {
        items.push_back(j);
    }
    std::vector<CountsRecord> out;
    for (const auto &item : items) {
        CountsRecord rec;
        try {
            rec.setting = MeasurementSetting::from_digits(field<std::string>(item, "setting"));
        } catch (const std::invalid_argument &e) {
            throw ParseError(std::string("bad setting: ") + e.what(), 0);
        }
        rec.shots = field<std::uint64_t>(item, "shots");
        const json counts = field<json>(item, "counts");
        if (!counts.is_object()) {
            throw ParseError("counts must be an object", 0);
        }
        for (const auto &[k, v] : counts.items()) {
            if (!v.is_number_unsigned()) {
                throw ParseError("count for outcome '" + k + "' must be a non-negative integer", 0);
            }
            rec.counts[k] = v.get<std::uint64_t>();
        }
        rec.validate();
        out.push_back(std::move(rec));
    }
    return out;
}

std::string write_counts_json(const std::vector<CountsRecord> &records) {
    ordered arr = ordered::array();
    for (const auto &rec : records) {
        ordered counts = ordered::object();
        for (const auto &[k, v] : rec.counts) {
            counts[k] = v;
        }
        arr.push_back({{"setting", rec.setting.str()}, {"shots", rec.shots}, {"counts", counts}});
    }
    if (arr.size() == 1) {
        return arr[0].dump(2) + "\n";
    }
    return arr.dump(2) + "\n";
}

CorrelationSet correlations_from_counts(const std::vector<CountsRecord> &records) {
    if (records.empty()) {
        throw DataError("correlations_from_counts: no records");
    }
    const std::size_t n = records.front().setting.num_qubits();
    struct Estimate {
        double value, error;
    };
    std::map<PauliString, std::vector<Estimate>> estimates;
    for (const auto &rec : records) {
        rec.validate();
        if (rec.setting.num_qubits() != n) {
            throw DimensionError("correlations_from_counts: records differ in qubit count");
        }
        if (rec.shots < 2) {
            throw DataError("correlations_from_counts: setting " + rec.setting.str() + " needs at least 2 shots");
        }
        std::vector<std::pair<std::uint64_t, double>> outcomes;
        for (const auto &[s, count] : rec.counts) {
            std::uint64_t bits = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (s[i] == '1') {
                    bits |= std::uint64_t{1} << i;
                }
            }
            outcomes.emplace_back(bits, static_cast<double>(count));
        }
        const double m = static_cast<double>(rec.shots);
        for (const auto &p : derivable_indices(rec.setting)) {
            if (p.is_identity()) {
                continue;
            }
            double sum = 0;
            for (const auto &[bits, count] : outcomes) {
                sum += (std::popcount(bits & p.support_mask()) & 1) ? -count : count;
            }
            double t = sum / m;
            estimates[p].push_back({t, std::sqrt(std::max(0.0, 1.0 - t * t) / (m - 1.0))});
        }
    }
    CorrelationSet out(n);
    out.set(PauliString(n), 1.0, 0.0);
    for (const auto &[p, list] : estimates) {
        if (list.size() == 1) {
            out.set(p, list[0].value, list[0].error);
            continue;
        }
        // Exact estimates dominate; otherwise weight by inverse variance.
        double exact_sum = 0, exact_count = 0;
        for (const auto &e : list) {
            if (e.error == 0) {
                exact_sum += e.value;
                exact_count += 1;
            }
        }
        if (exact_count > 0) {
            out.set(p, exact_sum / exact_count, 0.0);
            continue;
        }
        double wsum = 0, vsum = 0;
        for (const auto &e : list) {
            double w = 1.0 / (e.error * e.error);
            wsum += w;
            vsum += w * e.value;
        }
        out.set(p, vsum / wsum, std::sqrt(1.0 / wsum));
    }
    out.metadata["source"] = "counts";
    return out;
}

std::string state_to_json(const StateVector &psi) {
    ordered j;
    j["n"] = psi.num_qubits();
    j["amplitudes"] = ordered::array();
    for (const auto &a : psi.amplitudes()) {
        j["amplitudes"].push_back({a.real(), a.imag()});
    }
    return j.dump(2) + "\n";
}

StateVector state_from_json(std::string_view text) {
    json j = parse_json(text);
    auto n = field<std::size_t>(j, "n");
    auto amps = field<std::vector<std::array<double, 2>>>(j, "amplitudes");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = Complex(amps[i][0], amps[i][1]);
    }
    if (std::abs(v.norm() - 1.0) > 1e-6) {
        throw ValidationError("state amplitudes are not normalised");
    }
    return StateVector::normalized(n, std::move(v));
}

std::string witness_to_json(const WitnessSpec &w) {
    ordered j;
    j["id"] = w.id;
    j["n_qubits"] = w.num_qubits;
    j["operators"] = op_names(w.operators);
    ordered weights = ordered::array(), decimals = ordered::array();
    for (const auto &x : w.weights) {
        weights.push_back(rational_to_string(x));
        decimals.push_back(to_double(x));
    }
    j["weights"] = weights;
    j["weights_decimal"] = decimals;
    j["g0"] = rational_to_string(w.g0);
    j["g"] = rational_to_string(w.g);
    j["threshold"] = rational_to_string(w.threshold());
    j["threshold_decimal"] = to_double(w.threshold());
    j["bound_kind"] = bound_kind_name(w.bound_kind);
    ordered settings = ordered::array();
    for (const auto &s : w.settings) {
        settings.push_back(s.str());
    }
    j["settings"] = settings;
    ordered crits = ordered::array();
    for (const auto &c : w.per_cut_criteria) {
        crits.push_back({{"cut", c.cut.str()},
                         {"available", c.available},
                         {"class_a", op_names(c.class_a)},
                         {"class_b", op_names(c.class_b)},
                         {"bound", rational_to_string(c.bound)},
                         {"biclique", c.biclique},
                         {"ideal_score", c.ideal_score}});
    }
    j["per_cut_criteria"] = crits;
    j["metadata"] = metadata_json(w.metadata);
    return j.dump(2) + "\n";
}

WitnessSpec witness_from_json(std::string_view text) {
    json j = parse_json(text);
    WitnessSpec w;
    try {
        w.id = field<std::string>(j, "id");
        w.num_qubits = field<std::size_t>(j, "n_qubits");
        w.operators = ops_from(field<json>(j, "operators"));
        for (const auto &s : field<std::vector<std::string>>(j, "weights")) {
            w.weights.push_back(rational_from_string(s));
        }
        w.g0 = rational_from_string(field<std::string>(j, "g0"));
        w.g = rational_from_string(field<std::string>(j, "g"));
        for (const auto &s : field<std::vector<std::string>>(j, "settings")) {
            w.settings.push_back(MeasurementSetting::from_digits(s));
        }
        if (j.contains("bound_kind")) {
            auto kind = field<std::string>(j, "bound_kind");
            if (kind == "fully_separable") {
                w.bound_kind = BoundKind::kFullySeparable;
            } else if (kind != "biseparable") {
                throw ParseError("unknown bound_kind '" + kind + "'", 0);
            }
        }
        if (j.contains("per_cut_criteria")) {
            for (const auto &c : j["per_cut_criteria"]) {
                CutCriterion crit;
                crit.cut = Bipartition::from_string(field<std::string>(c, "cut"));
                crit.available = c.value("available", true);
                crit.class_a = ops_from(field<json>(c, "class_a"));
                crit.class_b = ops_from(field<json>(c, "class_b"));
                crit.bound = rational_from_string(c.value("bound", std::string("1/2")));
                crit.biclique = c.value("biclique", true);
                crit.ideal_score = c.value("ideal_score", 0.0);
                w.per_cut_criteria.push_back(std::move(crit));
            }
        }
        if (j.contains("metadata")) {
            for (const auto &[k, v] : j["metadata"].items()) {
                w.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("invalid witness: ") + e.what(), 0);
    }
    validate_witness(w);
    return w;
}

std::string report_to_json(const EvaluationReport &r) {
    ordered j;
    j["witness_id"] = r.witness_id;
    j["value"] = r.value;
    j["stderr"] = r.error;
    j["threshold"] = r.threshold;
    j["threshold_exact"] = r.threshold_exact;
    j["significance"] = significance_json(r.significance);
    j["bias_corrected_value"] = r.bias_corrected_value;
    j["bound_kind"] = bound_kind_name(r.bound_kind);
    ordered cuts = ordered::array();
    for (const auto &c : r.per_cut) {
        ordered e;
        e["cut"] = c.cut.str();
        e["available"] = c.available;
        e["value"] = c.value;
        e["stderr"] = c.error;
        e["bound"] = c.bound;
        e["significance"] = significance_json(c.significance);
        e["verdict"] = c.available ? (c.violated ? "violated" : "not_violated") : "unavailable";
        cuts.push_back(e);
    }
    j["per_cut"] = cuts;
    j["verdict"] = verdict_name(r.verdict);
    j["metadata"] = metadata_json(r.metadata);
    return j.dump(2) + "\n";
}

std::string oracle_reports_to_json(const std::vector<OracleReport> &reports) {
    ordered arr = ordered::array();
    for (const auto &r : reports) {
        ordered details = ordered::object();
        for (const auto &[k, v] : r.details) {
            details[k] = v;
        }
        arr.push_back({{"suite", r.suite},
                       {"trials", r.trials},
                       {"max_observed", r.max_observed},
                       {"bound", r.bound},
                       {"margin", r.margin},
                       {"pass", r.pass},
                       {"worst_case_descriptor", r.worst_case},
                       {"details", details}});
    }
    return arr.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepPoint> &points) {
    std::ostringstream out;
    out << "theta,phi,p,w_ghz,w_cluster,fidelity\n";
    for (const auto &p : points) {
        out << fmt(p.theta) << "," << fmt(p.phi) << "," << fmt(p.noise_p) << "," << fmt(p.w_ghz) << ","
            << fmt(p.w_cluster) << "," << fmt(p.fidelity) << "\n";
    }
    return out.str();
}

std::string sweep_to_json(const std::vector<SweepPoint> &points) {
    ordered arr = ordered::array();
    for (const auto &p : points) {
        arr.push_back({{"theta", p.theta},
                       {"phi", p.phi},
                       {"p", p.noise_p},
                       {"w_ghz", p.w_ghz},
                       {"w_cluster", p.w_cluster},
                       {"fidelity", p.fidelity}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace minwit

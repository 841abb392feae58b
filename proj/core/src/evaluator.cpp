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

#include "minwit/evaluator.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "minwit/errors.h"
#include "minwit/state.h"

namespace minwit {

std::string verdict_name(Verdict verdict) {
    return verdict == Verdict::kGenuineMultipartite ? "GenuineMultipartite" : "NotDetected";
}

double significance_check(double value, double stderr_value, double bound) {
    if (stderr_value < 0 || std::isnan(stderr_value)) {
        throw ArgumentError("significance_check: stderr must be non-negative");
    }
    if (stderr_value == 0) {
        if (value > bound) {
            return std::numeric_limits<double>::infinity();
        }
        if (value < bound) {
            return -std::numeric_limits<double>::infinity();
        }
        return 0.0;
    }
    return (value - bound) / stderr_value;
}

CutResult evaluate_criterion(const CutCriterion &criterion, const CorrelationSet &corrs) {
    CutResult r;
    r.cut = criterion.cut;
    r.bound = to_double(criterion.bound);
    if (!criterion.available || criterion.class_a.empty() || criterion.class_b.empty()) {
        r.available = false;
        return r;
    }
    double variance = 0;
    for (const auto *cls : {&criterion.class_a, &criterion.class_b}) {
        const double scale = 1.0 / static_cast<double>(cls->size());
        for (const auto &p : *cls) {
            const auto &c = corrs.at(p);
            r.value += 0.5 * scale * c.value * c.value;
            const double d = scale * c.value * c.error;
            variance += d * d;
        }
    }
    r.error = std::sqrt(variance);
    r.significance = significance_check(r.value, r.error, r.bound);
    r.violated = r.value > r.bound;
    return r;
}

EvaluationReport evaluate(const WitnessSpec &witness, const CorrelationSet &corrs) {
    if (corrs.num_qubits() != witness.num_qubits) {
        throw DimensionError("evaluate: correlation data and witness have different qubit counts");
    }
    EvaluationReport rep;
    rep.witness_id = witness.id;
    rep.bound_kind = witness.bound_kind;
    const double g0 = to_double(witness.g0);
    double sum = 0, corrected = 0, variance = 0;
    for (std::size_t j = 0; j < witness.operators.size(); ++j) {
        const auto &c = corrs.at(witness.operators[j]);
        const double v = to_double(witness.weights[j]);
        sum += v * c.value * c.value;
        corrected += v * (c.value * c.value - c.error * c.error);
        const double d = 2 * v * c.value * c.error;
        variance += d * d;
    }
    rep.value = sum / g0;
    rep.bias_corrected_value = corrected / g0;
    rep.error = std::sqrt(variance) / g0;
    rep.threshold = to_double(witness.threshold());
    rep.threshold_exact = rational_to_string(witness.threshold());
    rep.significance = significance_check(rep.value, rep.error, rep.threshold);
    rep.combined_violated = rep.value > rep.threshold;

    bool all_cuts = !witness.per_cut_criteria.empty();
    for (const auto &crit : witness.per_cut_criteria) {
        rep.per_cut.push_back(evaluate_criterion(crit, corrs));
        all_cuts = all_cuts && rep.per_cut.back().available && rep.per_cut.back().violated;
    }
    rep.verdict = (rep.combined_violated || all_cuts) ? Verdict::kGenuineMultipartite : Verdict::kNotDetected;
    rep.metadata["error_model"] = "first-order, independent errors; covariance within a setting ignored";
    rep.metadata["bound_kind"] = bound_kind_name(witness.bound_kind);
    return rep;
}

std::optional<double> critical_noise(const WitnessSpec &witness, const CorrelationSet &ideal_corrs) {
    double sum = 0;
    for (std::size_t j = 0; j < witness.operators.size(); ++j) {
        const double t = ideal_corrs.value(witness.operators[j]);
        sum += to_double(witness.weights[j]) * t * t;
    }
    const double g = to_double(witness.g);
    if (sum <= g) {
        return std::nullopt;
    }
    return std::sqrt(g / sum);
}

std::vector<double> sweep_grid(std::size_t steps) {
    if (steps == 0) {
        throw ArgumentError("sweep_grid: at least one step is required");
    }
    if (steps == 1) {
        return {0.0};
    }
    std::vector<double> out(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        out[k] = std::numbers::pi / 4 * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    return out;
}

std::vector<SweepPoint> theta_sweep(double phi, const std::vector<double> &thetas, const std::vector<double> &noise_p) {
    if (thetas.empty()) {
        throw ArgumentError("theta_sweep: no angles given");
    }
    if (noise_p.size() != 1 && noise_p.size() != thetas.size()) {
        throw ArgumentError("theta_sweep: give one noise value or one per angle");
    }
    const auto ghz = *named_criteria(NamedFamily::kGhz4).combined;
    const auto cluster = *named_criteria(NamedFamily::kCluster4).combined;
    std::vector<PauliString> ops = ghz.operators;
    ops.insert(ops.end(), cluster.operators.begin(), cluster.operators.end());

    std::vector<SweepPoint> out;
    out.reserve(thetas.size());
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        SweepPoint pt;
        pt.theta = thetas[k];
        pt.phi = phi;
        pt.noise_p = noise_p.size() == 1 ? noise_p[0] : noise_p[k];
        StateParams params;
        params.theta = pt.theta;
        params.phi = phi;
        auto psi = make_state(StateFamily::kPsi, 4, params);
        auto rho = add_white_noise(psi, pt.noise_p);
        auto corrs = correlations_for(rho, ops);
        pt.w_ghz = evaluate(ghz, corrs).value;
        pt.w_cluster = evaluate(cluster, corrs).value;
        pt.fidelity = fidelity(rho, psi);
        out.push_back(pt);
    }
    return out;
}

}  // namespace minwit

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

#ifndef MINWIT_EVALUATOR_H
#define MINWIT_EVALUATOR_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minwit/correlations.h"
#include "minwit/witness.h"

namespace minwit {

enum class Verdict { kGenuineMultipartite, kNotDetected };

std::string verdict_name(Verdict verdict);

struct CutResult {
    Bipartition cut;
    bool available = true;
    double value = 0;
    double error = 0;
    double bound = 0.5;
    double significance = 0;
    bool violated = false;
};

struct EvaluationReport {
    std::string witness_id;
    double value = 0;
    double error = 0;
    /// sum_j v_j (T_j^2 - stderr_j^2) / G0.
    double bias_corrected_value = 0;
    double threshold = 0;
    std::string threshold_exact;
    double significance = 0;
    bool combined_violated = false;
    BoundKind bound_kind = BoundKind::kBiseparable;
    std::vector<CutResult> per_cut;
    Verdict verdict = Verdict::kNotDetected;
    std::map<std::string, std::string> metadata;
};

/// Witness value (1/G0) sum_j v_j T_j^2 with first-order error propagation
/// assuming independent errors. Missing correlations throw DataError.
EvaluationReport evaluate(const WitnessSpec &witness, const CorrelationSet &corrs);

/// Value and propagated error of one cut criterion.
CutResult evaluate_criterion(const CutCriterion &criterion, const CorrelationSet &corrs);

/// (value - bound) / stderr; +-infinity when stderr is 0 (0 at equality).
double significance_check(double value, double stderr_value, double bound);

/// Noise parameter p at which the white-noise mixture reaches the threshold,
/// sqrt(G / sum_j v_j T_j^2). Empty when the target itself is not detected.
std::optional<double> critical_noise(const WitnessSpec &witness, const CorrelationSet &ideal_corrs);

struct SweepPoint {
    double theta = 0;
    double phi = 0;
    double noise_p = 1;
    double w_ghz = 0;
    double w_cluster = 0;
    double fidelity = 1;
};

/// Evaluates the four-qubit GHZ and cluster combined witnesses along the
/// Psi(theta, phi) family. `noise_p` holds one value for every point or one
/// value per theta.
std::vector<SweepPoint> theta_sweep(double phi, const std::vector<double> &thetas, const std::vector<double> &noise_p);

/// `steps` equidistant angles from 0 to pi/4 inclusive.
std::vector<double> sweep_grid(std::size_t steps);

}  // namespace minwit

#endif

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

#ifndef MINWIT_WITNESS_H
#define MINWIT_WITNESS_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minwit/correlations.h"
#include "minwit/graph.h"
#include "minwit/pauli.h"
#include "minwit/rational.h"

namespace minwit {

/// Vertices are operators; edges join pairs that cut-anticommute across
/// `cut`. Without a cut, edges join globally anticommuting pairs, so a
/// commuting operator set yields an edgeless graph.
struct AnticommGraph {
    std::vector<PauliString> vertices;
    std::optional<Bipartition> cut;
    Graph graph;
};

AnticommGraph build_graph(const std::vector<PauliString> &ops, const std::optional<Bipartition> &cut);

struct WeightedIndependentSet {
    Rational value;
    std::vector<int> assignment;
};

WeightedIndependentSet max_weight_independent(const AnticommGraph &graph, const std::vector<Rational> &weights);

/// Criterion (1/2)[mean_{a} T^2 + mean_{b} T^2] <= 1/2 for one cut.
struct CutCriterion {
    Bipartition cut;
    std::vector<PauliString> class_a;
    std::vector<PauliString> class_b;
    Rational bound{1, 2};
    bool available = true;
    /// Every a-b pair cut-anticommutes.
    bool biclique = true;
    /// Value on the construction target (squared correlations as supplied).
    double ideal_score = 1.0;
};

/// Exact check that the criterion's bound holds for every state separable
/// across its cut: the weighted independence number of the classes' cut graph
/// (weights 1/(2|a|), 1/(2|b|)) must not exceed 1/2.
bool criterion_is_valid(const CutCriterion &criterion);

/// Criterion value of a single cut given squared correlations.
double criterion_ideal_score(const CutCriterion &criterion, const CorrelationSet &corrs);

enum class BoundKind { kBiseparable, kFullySeparable };

std::string bound_kind_name(BoundKind kind);

struct WitnessSpec {
    std::string id;
    std::size_t num_qubits = 0;
    std::vector<PauliString> operators;
    std::vector<Rational> weights;
    Rational g0;
    Rational g;
    std::vector<MeasurementSetting> settings;
    std::vector<CutCriterion> per_cut_criteria;
    BoundKind bound_kind = BoundKind::kBiseparable;
    std::map<std::string, std::string> metadata;

    Rational threshold() const {
        return g / g0;
    }
};

/// Structural checks: sizes, positive weights, setting coverage, and that g0
/// and g match the exact independent-set values. Throws ValidationError.
void validate_witness(const WitnessSpec &witness);

/// Weighted independence number of every cut graph, in cut order.
std::vector<Rational> cut_bounds(const std::vector<PauliString> &ops, const std::vector<Rational> &weights,
                                 const std::vector<Bipartition> &cuts);

struct SelectOptions {
    double min_abs = 0.99;
    /// Keep a mutually commuting subset, preferring larger |T|.
    bool commuting_only = true;
};

/// Non-identity operators of `corrs` with |T| >= min_abs derivable from a
/// setting. Output is grouped by the first setting deriving each operator,
/// lexicographic within a group.
std::vector<PauliString> select_operators(const CorrelationSet &corrs, const std::vector<MeasurementSetting> &settings,
                                          const SelectOptions &options = {});

enum class WeightStatus { kOptimal, kNonDetecting, kDegenerate };

std::string weight_status_name(WeightStatus status);

struct WeightSolution {
    std::vector<Rational> weights;
    Rational g;
    Rational g0;
    WeightStatus status = WeightStatus::kOptimal;
    /// Operators that receive zero weight at every optimum.
    std::vector<std::size_t> zero_weight;
    std::vector<Rational> cut_values;
    std::size_t constraint_count = 0;
};

/// Minimises max_r G_r(v) subject to sum_j q_j v_j = 1, where q_j defaults to
/// 1 (for a commuting set this is min G/G0). Among optimal vectors the one
/// with the largest smallest weight is chosen. Weights are scaled so the
/// smallest positive weight is 1.
WeightSolution optimize_weights(const std::vector<PauliString> &ops, const std::vector<Bipartition> &cuts,
                                const std::vector<Rational> &ideal_squares = {});

struct BuildOptions {
    std::string id = "witness";
    double min_abs = 1e-6;
    bool commuting_only = false;
    bool with_cut_criteria = true;
};

WitnessSpec build_combined_witness(const CorrelationSet &state_corrs, const std::vector<MeasurementSetting> &settings,
                                   const BuildOptions &options = {});

/// Best setting pair for `state_corrs` (n <= 6): most unit correlations
/// covered, then lowest threshold.
std::vector<MeasurementSetting> propose_settings(const CorrelationSet &state_corrs);

std::vector<CutCriterion> build_cut_criteria(const std::vector<PauliString> &ops, const CorrelationSet &corrs,
                                             const std::vector<Bipartition> &cuts);

enum class NamedFamily { kGhz4, kCluster4, kDicke42, kSinglet4, kW4 };

NamedFamily parse_named_family(const std::string &name);
std::string named_family_name(NamedFamily family);

struct NamedCriteria {
    std::vector<CutCriterion> per_cut;
    std::optional<WitnessSpec> combined;
};

NamedCriteria named_criteria(NamedFamily family);

WitnessSpec nqubit_ghz_witness(std::size_t n, bool with_cut_criteria = true);

WitnessSpec nqubit_cluster_witness(std::size_t n);

/// Closed-form thresholds of the two families.
Rational ghz_family_threshold(std::size_t n);
Rational cluster_family_threshold(std::size_t n);

}  // namespace minwit

#endif

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

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "minwit/errors.h"
#include "minwit/lp.h"
#include "minwit/witness.h"

namespace minwit {

namespace {

std::vector<Rational> unit_weights(std::size_t n) {
    return std::vector<Rational>(n, Rational(1));
}

Rational max_of(const std::vector<Rational> &values) {
    Rational best = 0;
    for (const auto &v : values) {
        if (v > best) {
            best = v;
        }
    }
    return best;
}

}  // namespace

AnticommGraph build_graph(const std::vector<PauliString> &ops, const std::optional<Bipartition> &cut) {
    if (ops.empty()) {
        throw ArgumentError("build_graph: operator list is empty");
    }
    if (ops.size() > 64) {
        throw ArgumentError("build_graph: at most 64 operators are supported");
    }
    AnticommGraph out{ops, cut, Graph(ops.size())};
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            bool edge = cut ? cut_anticommutes(ops[i], ops[j], *cut) : !commutes(ops[i], ops[j]);
            if (edge) {
                out.graph.add_edge(i, j);
            }
        }
    }
    return out;
}

WeightedIndependentSet max_weight_independent(const AnticommGraph &graph, const std::vector<Rational> &weights) {
    for (const auto &w : weights) {
        if (w < 0) {
            throw ArgumentError("max_weight_independent: weights must be non-negative");
        }
    }
    auto best = max_weight_independent_set<Rational>(graph.graph, weights);
    WeightedIndependentSet out{best.value, std::vector<int>(graph.vertices.size(), 0)};
    for (std::size_t i = 0; i < out.assignment.size(); ++i) {
        out.assignment[i] = static_cast<int>((best.members >> i) & 1);
    }
    return out;
}

std::vector<Rational> cut_bounds(const std::vector<PauliString> &ops, const std::vector<Rational> &weights,
                                 const std::vector<Bipartition> &cuts) {
    std::vector<Rational> out;
    out.reserve(cuts.size());
    for (const auto &cut : cuts) {
        out.push_back(max_weight_independent(build_graph(ops, cut), weights).value);
    }
    return out;
}

std::string bound_kind_name(BoundKind kind) {
    return kind == BoundKind::kBiseparable ? "biseparable" : "fully_separable";
}

std::string weight_status_name(WeightStatus status) {
    switch (status) {
        case WeightStatus::kOptimal:
            return "optimal";
        case WeightStatus::kNonDetecting:
            return "non_detecting";
        case WeightStatus::kDegenerate:
            return "degenerate";
    }
    return "unknown";
}

void validate_witness(const WitnessSpec &w) {
    const std::size_t n = w.num_qubits;
    if (w.operators.empty() || w.operators.size() != w.weights.size()) {
        throw ValidationError("witness " + w.id + ": operator and weight counts differ or are zero");
    }
    for (std::size_t i = 0; i < w.operators.size(); ++i) {
        if (w.operators[i].num_qubits() != n) {
            throw ValidationError("witness " + w.id + ": operator " + w.operators[i].str() + " has wrong length");
        }
        if (w.operators[i].is_identity()) {
            throw ValidationError("witness " + w.id + ": identity operator listed");
        }
        if (w.weights[i] <= 0) {
            throw ValidationError("witness " + w.id + ": weight of " + w.operators[i].str() + " is not positive");
        }
        bool covered = std::any_of(w.settings.begin(), w.settings.end(),
                                   [&](const MeasurementSetting &s) { return is_derivable(w.operators[i], s); });
        if (!covered) {
            throw ValidationError("witness " + w.id + ": operator " + w.operators[i].str() +
                                  " is not derivable from any listed setting");
        }
    }
    if (w.g0 <= 0 || w.g <= 0) {
        throw ValidationError("witness " + w.id + ": bounds must be positive");
    }
    if (w.g >= w.g0) {
        throw ValidationError("witness " + w.id + ": G >= G0, the witness detects nothing");
    }
    for (const auto &c : w.per_cut_criteria) {
        if (c.cut.num_qubits() != n) {
            throw ValidationError("witness " + w.id + ": criterion cut has wrong size");
        }
    }
}

std::vector<PauliString> select_operators(const CorrelationSet &corrs, const std::vector<MeasurementSetting> &settings,
                                          const SelectOptions &options) {
    if (settings.empty()) {
        throw ArgumentError("select_operators: no settings given");
    }
    if (!(options.min_abs > 0 && options.min_abs <= 1)) {
        throw ArgumentError("select_operators: min_abs must lie in (0, 1]");
    }
    struct Candidate {
        PauliString op;
        double abs_value;
        std::size_t group;
    };
    std::vector<Candidate> candidates;
    std::set<PauliString> seen;
    for (std::size_t k = 0; k < settings.size(); ++k) {
        if (settings[k].num_qubits() != corrs.num_qubits()) {
            throw DimensionError("select_operators: setting " + settings[k].str() + " has wrong length");
        }
        for (const auto &p : derivable_indices(settings[k])) {
            if (p.is_identity() || seen.count(p)) {
                continue;
            }
            auto c = corrs.find(p);
            if (c && std::abs(c->value) >= options.min_abs) {
                seen.insert(p);
                candidates.push_back({p, std::abs(c->value), k});
            }
        }
    }
    if (options.commuting_only) {
        std::vector<Candidate> order = candidates;
        std::stable_sort(order.begin(), order.end(), [](const Candidate &a, const Candidate &b) {
            if (a.abs_value != b.abs_value) {
                return a.abs_value > b.abs_value;
            }
            return a.op < b.op;
        });
        std::vector<Candidate> kept;
        for (const auto &c : order) {
            bool ok = std::all_of(kept.begin(), kept.end(), [&](const Candidate &k) { return commutes(k.op, c.op); });
            if (ok) {
                kept.push_back(c);
            }
        }
        candidates = std::move(kept);
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
        if (a.group != b.group) {
            return a.group < b.group;
        }
        return a.op < b.op;
    });
    if (candidates.empty()) {
        throw ConstructionError("no usable operators");
    }
    std::vector<PauliString> out;
    out.reserve(candidates.size());
    for (const auto &c : candidates) {
        out.push_back(c.op);
    }
    return out;
}

WeightSolution optimize_weights(const std::vector<PauliString> &ops, const std::vector<Bipartition> &cuts,
                                const std::vector<Rational> &ideal_squares) {
    const std::size_t m = ops.size();
    if (m == 0) {
        throw ArgumentError("optimize_weights: operator list is empty");
    }
    if (cuts.empty()) {
        throw ArgumentError("optimize_weights: no cuts given");
    }
    std::vector<Rational> q = ideal_squares.empty() ? unit_weights(m) : ideal_squares;
    if (q.size() != m) {
        throw DimensionError("optimize_weights: ideal square count differs from operator count");
    }
    for (const auto &x : q) {
        if (x <= 0) {
            throw ArgumentError("optimize_weights: ideal squares must be positive");
        }
    }

    std::set<std::uint64_t> maximal;
    for (const auto &cut : cuts) {
        auto g = build_graph(ops, cut);
        for (auto set : maximal_independent_sets(g.graph)) {
            maximal.insert(set);
        }
    }

    // Stage 1: minimise t subject to sum q v = 1 and sum_{M} v <= t.
    lp::Problem first;
    first.num_vars = m + 1;
    first.objective.assign(m + 1, Rational(0));
    first.objective[m] = 1;
    lp::Constraint norm{std::vector<Rational>(m + 1, Rational(0)), lp::Sense::kEqual, Rational(1)};
    for (std::size_t j = 0; j < m; ++j) {
        norm.coeffs[j] = q[j];
    }
    first.constraints.push_back(norm);
    for (auto set : maximal) {
        lp::Constraint c{std::vector<Rational>(m + 1, Rational(0)), lp::Sense::kLessEqual, Rational(0)};
        for (std::size_t j = 0; j < m; ++j) {
            if ((set >> j) & 1) {
                c.coeffs[j] = 1;
            }
        }
        c.coeffs[m] = -1;
        first.constraints.push_back(std::move(c));
    }
    auto s1 = lp::solve(first);
    if (s1.status != lp::Status::kOptimal) {
        throw ConstructionError("optimize_weights: linear program has no optimum");
    }
    const Rational t_star = s1.objective;

    // Stage 2: at t = t*, maximise the smallest weight u.
    lp::Problem second;
    second.num_vars = m + 1;
    second.maximize = true;
    second.objective.assign(m + 1, Rational(0));
    second.objective[m] = 1;
    lp::Constraint norm2 = norm;
    norm2.coeffs[m] = 0;
    second.constraints.push_back(norm2);
    for (auto set : maximal) {
        lp::Constraint c{std::vector<Rational>(m + 1, Rational(0)), lp::Sense::kLessEqual, t_star};
        for (std::size_t j = 0; j < m; ++j) {
            if ((set >> j) & 1) {
                c.coeffs[j] = 1;
            }
        }
        second.constraints.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < m; ++j) {
        lp::Constraint c{std::vector<Rational>(m + 1, Rational(0)), lp::Sense::kLessEqual, Rational(0)};
        c.coeffs[m] = 1;
        c.coeffs[j] = -1;
        second.constraints.push_back(std::move(c));
    }
    auto s2 = lp::solve(second);
    if (s2.status != lp::Status::kOptimal) {
        throw ConstructionError("optimize_weights: tie-break program has no optimum");
    }

    WeightSolution out;
    out.constraint_count = maximal.size();
    out.weights.assign(s2.x.begin(), s2.x.begin() + static_cast<std::ptrdiff_t>(m));
    Rational smallest = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (out.weights[j] == 0) {
            out.zero_weight.push_back(j);
        } else if (smallest == 0 || out.weights[j] < smallest) {
            smallest = out.weights[j];
        }
    }
    for (auto &w : out.weights) {
        w /= smallest;
    }
    out.cut_values = cut_bounds(ops, out.weights, cuts);
    out.g = max_of(out.cut_values);
    out.g0 = max_weight_independent(build_graph(ops, std::nullopt), out.weights).value;
    if (!out.zero_weight.empty()) {
        out.status = WeightStatus::kDegenerate;
    } else if (out.g >= out.g0) {
        out.status = WeightStatus::kNonDetecting;
    }
    return out;
}

WitnessSpec build_combined_witness(const CorrelationSet &state_corrs, const std::vector<MeasurementSetting> &settings,
                                   const BuildOptions &options) {
    const std::size_t n = state_corrs.num_qubits();
    if (n < 2) {
        throw ArgumentError("build_combined_witness: at least two qubits are required");
    }
    const auto cuts = enumerate_bipartitions(n);
    auto ops = select_operators(state_corrs, settings, {options.min_abs, options.commuting_only});

    WeightSolution sol;
    std::vector<Rational> q;
    std::size_t dropped = 0;
    while (true) {
        q.clear();
        for (const auto &p : ops) {
            double t = state_corrs.value(p);
            q.push_back(rational_approx(t * t));
        }
        sol = optimize_weights(ops, cuts, q);
        if (sol.status != WeightStatus::kDegenerate || sol.zero_weight.size() == ops.size()) {
            break;
        }
        std::vector<PauliString> kept;
        for (std::size_t j = 0; j < ops.size(); ++j) {
            if (!std::binary_search(sol.zero_weight.begin(), sol.zero_weight.end(), j)) {
                kept.push_back(ops[j]);
            }
        }
        dropped += ops.size() - kept.size();
        ops = std::move(kept);
    }
    if (sol.status == WeightStatus::kNonDetecting) {
        throw ConstructionError("witness detects nothing: G >= G0 for these settings");
    }

    WitnessSpec w;
    w.id = options.id;
    w.num_qubits = n;
    w.operators = ops;
    w.weights = sol.weights;
    w.g0 = sol.g0;
    w.g = sol.g;
    for (const auto &s : settings) {
        bool used = std::any_of(ops.begin(), ops.end(), [&](const PauliString &p) { return is_derivable(p, s); });
        if (used && std::find(w.settings.begin(), w.settings.end(), s) == w.settings.end()) {
            w.settings.push_back(s);
        }
    }
    Rational ideal = 0;
    for (std::size_t j = 0; j < ops.size(); ++j) {
        ideal += sol.weights[j] * q[j];
    }
    ideal /= sol.g0;
    w.metadata["ideal_value"] = rational_to_string(ideal);
    w.metadata["weight_status"] = weight_status_name(sol.status);
    w.metadata["lp_constraints"] = std::to_string(sol.constraint_count);
    w.metadata["min_abs"] = std::to_string(options.min_abs);
    w.metadata["dropped_operators"] = std::to_string(dropped);
    std::string certificate;
    for (std::size_t r = 0; r < cuts.size(); ++r) {
        if (!certificate.empty()) {
            certificate += ",";
        }
        certificate += cuts[r].str() + "=" + rational_to_string(sol.cut_values[r]);
    }
    w.metadata["cut_bounds"] = certificate;
    if (state_corrs.metadata.count("family")) {
        w.metadata["family"] = state_corrs.metadata.at("family");
    }
    if (options.with_cut_criteria) {
        w.per_cut_criteria = build_cut_criteria(ops, state_corrs, cuts);
    }
    return w;
}

std::vector<MeasurementSetting> propose_settings(const CorrelationSet &state_corrs) {
    const std::size_t n = state_corrs.num_qubits();
    if (n < 2 || n > 6) {
        throw ArgumentError("propose_settings: automatic settings need 2 <= n <= 6");
    }
    std::vector<PauliString> unit;
    for (const auto &[p, c] : state_corrs.entries()) {
        if (!p.is_identity() && std::abs(c.value) >= 1 - 1e-9) {
            unit.push_back(p);
        }
    }
    if (unit.empty()) {
        throw ConstructionError("propose_settings: state has no unit correlations");
    }
    std::vector<MeasurementSetting> all;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= 3;
    }
    for (std::size_t code = 0; code < total; ++code) {
        std::string digits(n, '1');
        std::size_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            digits[i] = static_cast<char>('1' + c % 3);
            c /= 3;
        }
        all.push_back(MeasurementSetting::from_digits(digits));
    }
    const std::size_t words = (unit.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cover(all.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t s = 0; s < all.size(); ++s) {
        for (std::size_t u = 0; u < unit.size(); ++u) {
            if (is_derivable(unit[u], all[s])) {
                cover[s][u / 64] |= std::uint64_t{1} << (u % 64);
            }
        }
    }
    struct Pair {
        std::size_t count, a, b;
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            std::size_t count = 0;
            for (std::size_t w = 0; w < words; ++w) {
                count += static_cast<std::size_t>(std::popcount(cover[a][w] | cover[b][w]));
            }
            pairs.push_back({count, a, b});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair &x, const Pair &y) { return x.count > y.count; });

    constexpr std::size_t kMaxEvaluations = 64;
    std::optional<std::size_t> found_count;
    std::optional<Rational> best_threshold;
    std::vector<MeasurementSetting> best;
    std::size_t evaluations = 0;
    BuildOptions opts;
    opts.min_abs = 1 - 1e-9;
    opts.commuting_only = true;
    opts.with_cut_criteria = false;
    for (const auto &pair : pairs) {
        if (found_count && pair.count < *found_count) {
            break;
        }
        if (evaluations++ >= kMaxEvaluations) {
            break;
        }
        try {
            auto w = build_combined_witness(state_corrs, {all[pair.a], all[pair.b]}, opts);
            if (!best_threshold || w.threshold() < *best_threshold) {
                best_threshold = w.threshold();
                best = {all[pair.a], all[pair.b]};
            }
            found_count = pair.count;
        } catch (const ConstructionError &) {
        } catch (const ArgumentError &) {
        }
    }
    if (best.empty()) {
        throw ConstructionError("propose_settings: no setting pair yields a detecting witness");
    }
    return best;
}

}  // namespace minwit

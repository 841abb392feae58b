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


#include <gtest/gtest.h>

#include "minwit/errors.h"
#include "minwit/evaluator.h"
#include "minwit/oracle.h"
#include "minwit/state.h"
#include "minwit/witness.h"

namespace minwit {
namespace {

std::vector<PauliString> ops_from(std::initializer_list<const char *> names) {
    std::vector<PauliString> out;
    for (const char *n : names) {
        out.push_back(PauliString::from_digits(n));
    }
    return out;
}

OracleOptions quick(std::size_t trials = 4000) {
    OracleOptions o;
    o.trials = trials;
    o.restarts = 4;
    return o;
}

TEST(AnticommutingBound, SingleQubitBlochSphereSaturates) {
    auto r = check_anticommuting_bound(ops_from({"1", "2", "3"}), quick());
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.max_observed, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(r.bound, 1.0);
    EXPECT_EQ(r.details.at("maximally_mixed"), 0.0);
}

TEST(AnticommutingBound, TwoQubitTriple) {
    auto r = check_anticommuting_bound(ops_from({"11", "21", "30"}), quick());
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.max_observed, 1.0 + 1e-9);
    EXPECT_NEAR(r.margin, r.bound - r.max_observed, 1e-15);
    // XX and YY anticommute on both sites, so they commute overall.
    EXPECT_THROW(check_anticommuting_bound(ops_from({"11", "22"}), quick()), ArgumentError);
}

TEST(BiseparableBound, GhzPairAcrossSingleQubitCut) {
    auto cut = Bipartition::from_string("A|BCD");
    auto r = check_biseparable_bound(PauliString::from_digits("3333"), PauliString::from_digits("1221"), cut, quick());
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.max_observed, 1.0 + 1e-9);
    EXPECT_LT(r.details.at("factorization_deviation"), 1e-10);
    EXPECT_NEAR(r.details.at("optimizer_best"), 1.0, 1e-3);

    // The entangled contrast case exceeds the separable bound.
    auto ghz = make_state(StateFamily::kGhz, 4);
    double t1 = correlation(ghz, PauliString::from_digits("3333"));
    double t2 = correlation(ghz, PauliString::from_digits("1221"));
    EXPECT_NEAR(t1 * t1 + t2 * t2, 2.0, 1e-12);
}

TEST(BiseparableBound, TwoQubitOptimizerReachesOne) {
    auto r = check_biseparable_bound(PauliString::from_digits("33"), PauliString::from_digits("11"),
                                     Bipartition::from_string("A|B"), quick());
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.details.at("optimizer_best"), 1.0, 1e-6);
    EXPECT_THROW(check_biseparable_bound(PauliString::from_digits("3300"), PauliString::from_digits("0033"),
                                         Bipartition::from_string("AB|CD"), quick()),
                 ArgumentError);
}

TEST(WitnessThreshold, GhzIsTight) {
    auto w = *named_criteria(NamedFamily::kGhz4).combined;
    auto r = check_witness_threshold(w, quick(20000));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.bound, 7.0 / 11, 1e-15);
    EXPECT_LE(r.max_observed, 7.0 / 11 + 1e-9);
    EXPECT_GT(r.details.at("optimizer_best"), 7.0 / 11 - 1e-3);
    // |0000> is separable across every cut and reaches the threshold.
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(16);
    zero[0] = 1;
    auto v = evaluate(w, correlations_for(StateVector(4, zero), w.operators));
    EXPECT_NEAR(v.value, 7.0 / 11, 1e-12);
}

TEST(WitnessThreshold, ClusterAndMaximallyMixed) {
    auto w = *named_criteria(NamedFamily::kCluster4).combined;
    auto r = check_witness_threshold(w, quick(20000));
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.bound, 2.0 / 3, 1e-15);
    EXPECT_GT(r.details.at("optimizer_best"), 2.0 / 3 - 1e-3);
    auto mixed = correlations_for(DensityMatrix::maximally_mixed(4), w.operators);
    EXPECT_EQ(evaluate(w, mixed).value, 0.0);
}

TEST(WitnessThreshold, FullySeparableBoundForSinglet) {
    auto w = *named_criteria(NamedFamily::kSinglet4).combined;
    auto r = check_witness_threshold(w, quick(20000));
    EXPECT_TRUE(r.pass) << r.max_observed;
    EXPECT_NEAR(r.bound, 3.0 / 5, 1e-15);
}

TEST(WitnessThreshold, OptimizedSixQubitClusterWitness) {
    auto closed = nqubit_cluster_witness(6);
    auto w = build_combined_witness(nonvanishing_correlations(make_state(StateFamily::kClusterStabilizer, 6)),
                                    closed.settings);
    auto o = quick(3000);
    o.restarts = 2;
    auto r = check_witness_threshold(w, o);
    EXPECT_TRUE(r.pass) << r.max_observed << " " << r.worst_case;
    EXPECT_NEAR(r.bound, 2.0 / 3, 1e-15);
}

TEST(WitnessThreshold, DeterministicAcrossThreadCounts) {
    auto w = *named_criteria(NamedFamily::kGhz4).combined;
    auto a = quick(3000);
    a.threads = 1;
    auto b = quick(3000);
    b.threads = 4;
    auto ra = check_witness_threshold(w, a);
    auto rb = check_witness_threshold(w, b);
    EXPECT_EQ(ra.max_observed, rb.max_observed);
    EXPECT_EQ(ra.details, rb.details);
}

TEST(CommutingSaturation, Examples) {
    auto ghz = check_commuting_saturation(
        ops_from({"3333", "3300", "0033", "3003", "0330", "3030", "0303", "1221"}), quick());
    EXPECT_TRUE(ghz.pass);
    EXPECT_NEAR(ghz.details.at("joint_eigenstate"), 8.0, 1e-10);
    EXPECT_LE(ghz.details.at("random_max"), 8.0 + 1e-9);

    auto bell = check_commuting_saturation(ops_from({"33", "11"}), quick());
    EXPECT_TRUE(bell.pass);
    EXPECT_NEAR(bell.details.at("joint_eigenstate"), 2.0, 1e-10);

    auto single = check_commuting_saturation(ops_from({"13"}), quick());
    EXPECT_NEAR(single.details.at("joint_eigenstate"), 1.0, 1e-10);

    EXPECT_THROW(check_commuting_saturation(ops_from({"30", "10"}), quick()), ArgumentError);
}

}  // namespace
}  // namespace minwit

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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "minwit/errors.h"
#include "minwit/evaluator.h"
#include "minwit/state.h"
#include "minwit/witness.h"

namespace minwit {
namespace {

struct Row {
    const char *index;
    double value;
    double error;
};

// Measured four-qubit correlations used throughout (GHZ and cluster targets).
const Row kGhzData[] = {{"3333", 0.982, 0.003}, {"3300", 0.993, 0.002}, {"0033", 0.988, 0.002},
                        {"3003", 0.963, 0.004}, {"0330", 0.969, 0.004}, {"3030", 0.972, 0.004},
                        {"0303", 0.960, 0.005}, {"1221", -0.925, 0.006}};
const Row kClusterData[] = {{"3300", 0.987, 0.002}, {"3011", 0.986, 0.003},  {"0311", 0.974, 0.003},
                            {"1130", -0.945, 0.006}, {"1103", -0.934, 0.006}, {"0033", 0.989, 0.002}};

template <std::size_t N>
CorrelationSet data(const Row (&rows)[N]) {
    CorrelationSet c(4);
    for (const auto &r : rows) {
        c.set(PauliString::from_digits(r.index), r.value, r.error);
    }
    return c;
}

WitnessSpec ghz_witness() {
    return *named_criteria(NamedFamily::kGhz4).combined;
}

WitnessSpec cluster_witness() {
    return *named_criteria(NamedFamily::kCluster4).combined;
}

double sq(double x) {
    return x * x;
}

TEST(Evaluate, GhzDataByHand) {
    auto rep = evaluate(ghz_witness(), data(kGhzData));
    double sum = 0;
    double var = 0;
    for (const auto &r : kGhzData) {
        double v = std::string(r.index) == "1221" ? 4 : 1;
        sum += v * sq(r.value);
        var += sq(2 * v * r.value * r.error);
    }
    EXPECT_NEAR(rep.value, sum / 11, 1e-12);
    EXPECT_NEAR(rep.error, std::sqrt(var) / 11, 1e-12);
    EXPECT_NEAR(rep.value, 0.916, 0.001);
    EXPECT_NEAR(rep.threshold, 7.0 / 11, 1e-15);
    EXPECT_EQ(rep.threshold_exact, "7/11");
    EXPECT_NEAR(rep.significance, (rep.value - 7.0 / 11) / rep.error, 1e-9);
    EXPECT_EQ(rep.verdict, Verdict::kGenuineMultipartite);
    EXPECT_TRUE(rep.combined_violated);
}

TEST(Evaluate, GhzPerCutByHand) {
    auto rep = evaluate(ghz_witness(), data(kGhzData));
    ASSERT_EQ(rep.per_cut.size(), 7u);
    const auto &c = rep.per_cut[0];
    EXPECT_EQ(c.cut.str(), "A|BCD");
    double expected = 0.5 * ((sq(0.972) + sq(0.963) + sq(0.993) + sq(0.982)) / 4 + sq(0.925));
    EXPECT_NEAR(c.value, expected, 1e-12);
    double var = sq(2 * 0.972 * 0.004 / 8) + sq(2 * 0.963 * 0.004 / 8) + sq(2 * 0.993 * 0.002 / 8) +
                 sq(2 * 0.982 * 0.003 / 8) + sq(2 * 0.925 * 0.006 / 2);
    EXPECT_NEAR(c.error, std::sqrt(var), 1e-12);
    for (const auto &r : rep.per_cut) {
        EXPECT_TRUE(r.violated);
        EXPECT_GT(r.significance, 50);
    }
}

TEST(Evaluate, ClusterData) {
    auto rep = evaluate(cluster_witness(), data(kClusterData));
    double sum = 0;
    for (const auto &r : kClusterData) {
        sum += sq(r.value);
    }
    EXPECT_NEAR(rep.value, sum / 6, 1e-12);
    EXPECT_NEAR(rep.value, 0.940, 0.001);
    EXPECT_EQ(rep.verdict, Verdict::kGenuineMultipartite);
}

TEST(Evaluate, IdealDataHasZeroError) {
    auto w = ghz_witness();
    auto rep = evaluate(w, correlations_for(make_state(StateFamily::kGhz, 4), w.operators));
    EXPECT_NEAR(rep.value, 1.0, 1e-12);
    EXPECT_EQ(rep.error, 0.0);
    EXPECT_EQ(rep.significance, std::numeric_limits<double>::infinity());
}

TEST(Evaluate, MissingCorrelationIsNamed) {
    auto c = data(kGhzData);
    CorrelationSet partial(4);
    for (const auto &[p, v] : c.entries()) {
        if (p.str() != "0303") {
            partial.set(p, v.value, v.error);
        }
    }
    try {
        evaluate(ghz_witness(), partial);
        FAIL() << "expected DataError";
    } catch (const DataError &e) {
        EXPECT_NE(std::string(e.what()).find("0303"), std::string::npos);
    }
    EXPECT_THROW(evaluate(ghz_witness(), CorrelationSet(3)), DimensionError);
}

TEST(Evaluate, NoisyStateIsNotDetected) {
    auto w = ghz_witness();
    auto rho = add_white_noise(make_state(StateFamily::kGhz, 4), 0.7);
    auto rep = evaluate(w, correlations_for(rho, w.operators));
    EXPECT_NEAR(rep.value, 0.49, 1e-12);
    EXPECT_EQ(rep.verdict, Verdict::kNotDetected);
    for (const auto &c : rep.per_cut) {
        EXPECT_FALSE(c.violated);
    }
}

TEST(Evaluate, ValueScalesWithNoiseSquared) {
    auto w = cluster_witness();
    auto psi = make_state(StateFamily::kCluster4, 4);
    double prev = -1;
    for (double p = 0; p <= 1.0001; p += 0.05) {
        double v = evaluate(w, correlations_for(add_white_noise(psi, std::min(p, 1.0)), w.operators)).value;
        EXPECT_NEAR(v, sq(std::min(p, 1.0)), 1e-12);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(Evaluate, FirstOrderErrorMatchesMonteCarlo) {
    for (auto [w, c] : {std::pair{ghz_witness(), data(kGhzData)}, std::pair{cluster_witness(), data(kClusterData)}}) {
        auto rep = evaluate(w, c);
        std::mt19937_64 rng(99);
        std::normal_distribution<double> g;
        const int reps = 10000;
        double s1 = 0;
        double s2 = 0;
        for (int k = 0; k < reps; ++k) {
            CorrelationSet sample(4);
            for (const auto &[p, v] : c.entries()) {
                sample.set(p, std::clamp(v.value + v.error * g(rng), -1.0, 1.0), v.error);
            }
            double x = evaluate(w, sample).value;
            s1 += x;
            s2 += x * x;
        }
        double mean = s1 / reps;
        double sd = std::sqrt(s2 / reps - mean * mean);
        EXPECT_NEAR(sd / rep.error, 1.0, 0.15);
    }
}

TEST(SignificanceCheck, Examples) {
    EXPECT_NEAR(significance_check(0.894, 0.007, 0.5), 56.29, 0.01);
    EXPECT_EQ(significance_check(0.5, 0.01, 0.5), 0.0);
    EXPECT_NEAR(significance_check(0.916, 0.005, 7.0 / 11), 55.93, 0.01);
    EXPECT_EQ(significance_check(0.6, 0.0, 0.5), std::numeric_limits<double>::infinity());
    EXPECT_EQ(significance_check(0.4, 0.0, 0.5), -std::numeric_limits<double>::infinity());
    EXPECT_THROW(significance_check(0.4, -1.0, 0.5), ArgumentError);
}

TEST(CriticalNoise, MatchesClosedForm) {
    auto g = ghz_witness();
    auto c = cluster_witness();
    auto pg = critical_noise(g, correlations_for(make_state(StateFamily::kGhz, 4), g.operators));
    auto pc = critical_noise(c, correlations_for(make_state(StateFamily::kCluster4, 4), c.operators));
    ASSERT_TRUE(pg && pc);
    EXPECT_NEAR(*pg, std::sqrt(7.0 / 11), 1e-12);
    EXPECT_NEAR(*pc, std::sqrt(2.0 / 3), 1e-12);

    CorrelationSet weak(4);
    for (const auto &p : g.operators) {
        weak.set(p, p.str() == "3333" ? 1.0 : 0.0);
    }
    EXPECT_FALSE(critical_noise(g, weak).has_value());
}

TEST(Sweep, GridAndEndpoints) {
    auto grid = sweep_grid(13);
    ASSERT_EQ(grid.size(), 13u);
    EXPECT_EQ(grid.front(), 0.0);
    EXPECT_NEAR(grid.back(), std::numbers::pi / 4, 1e-15);
    auto pts = theta_sweep(std::numbers::pi, grid, {1.0});
    ASSERT_EQ(pts.size(), 13u);
    EXPECT_NEAR(pts[0].w_ghz, 1, 1e-12);
    EXPECT_NEAR(pts[0].w_cluster, 1.0 / 3, 1e-12);
    EXPECT_NEAR(pts[6].w_cluster, 1, 1e-12);
    EXPECT_NEAR(pts[6].w_ghz, 7.0 / 11, 1e-12);
    EXPECT_NEAR(pts[12].w_ghz, 1, 1e-12);
    EXPECT_NEAR(pts[12].w_cluster, 1.0 / 3, 1e-12);
    for (const auto &p : pts) {
        EXPECT_NEAR(p.fidelity, 1, 1e-12);
    }
}

TEST(Sweep, SymmetricAboutPiOverEight) {
    auto pts = theta_sweep(std::numbers::pi, sweep_grid(13), {1.0});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_NEAR(pts[i].w_ghz, pts[12 - i].w_ghz, 1e-10);
        EXPECT_NEAR(pts[i].w_cluster, pts[12 - i].w_cluster, 1e-10);
    }
}

TEST(Sweep, BothWitnessesDetectOnAnInterval) {
    auto pts = theta_sweep(std::numbers::pi, sweep_grid(13), {1.0});
    int both = 0;
    for (const auto &p : pts) {
        if (p.w_ghz > 7.0 / 11 + 1e-12 && p.w_cluster > 2.0 / 3 + 1e-12) {
            ++both;
        }
        EXPECT_TRUE(p.w_ghz > 7.0 / 11 - 1e-12 || p.w_cluster > 2.0 / 3 - 1e-12);
    }
    EXPECT_GT(both, 0);
}

TEST(Sweep, NoiseAndArguments) {
    auto pts = theta_sweep(std::numbers::pi, {0.0, 0.1}, {0.9, 0.8});
    EXPECT_NEAR(pts[0].w_ghz, 0.81, 1e-12);
    EXPECT_NEAR(pts[1].noise_p, 0.8, 0);
    EXPECT_THROW(theta_sweep(0, {}, {1.0}), ArgumentError);
    EXPECT_THROW(theta_sweep(0, {0.1, 0.2, 0.3}, {1.0, 0.9}), ArgumentError);
}

}  // namespace
}  // namespace minwit

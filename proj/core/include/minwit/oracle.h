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

#ifndef MINWIT_ORACLE_H
#define MINWIT_ORACLE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minwit/pauli.h"
#include "minwit/witness.h"

namespace minwit {

struct OracleReport {
    std::string suite;
    std::size_t trials = 0;
    double max_observed = 0;
    double bound = 0;
    double margin = 0;
    bool pass = false;
    std::string worst_case;
    /// Extra named numbers, e.g. per-cut maxima or the optimizer's best value.
    std::map<std::string, double> details;
};

struct OracleOptions {
    std::size_t trials = 100000;
    std::uint64_t seed = 20130101;
    /// Local refinement restarts per cut.
    std::size_t restarts = 12;
    /// 0 picks the hardware concurrency.
    std::size_t threads = 0;
};

/// Samples pure and mixed states and checks sum_j T_j^2 <= 1 for pairwise
/// anticommuting operators.
OracleReport check_anticommuting_bound(const std::vector<PauliString> &ops, const OracleOptions &options = {});

/// Checks T_p^2 + T_q^2 <= 1 on states separable across `cut`.
OracleReport check_biseparable_bound(const PauliString &p, const PauliString &q, const Bipartition &cut,
                                     const OracleOptions &options = {});

/// Maximises the witness over biseparable (or fully separable, per the
/// witness's bound kind) states and compares with G/G0.
OracleReport check_witness_threshold(const WitnessSpec &witness, const OracleOptions &options = {});

/// Builds a joint eigenstate of pairwise commuting operators and checks that
/// it reaches sum_j T_j^2 = |ops| while random states stay below.
OracleReport check_commuting_saturation(const std::vector<PauliString> &ops, const OracleOptions &options = {});

}  // namespace minwit

#endif

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

#ifndef MINWIT_LP_H
#define MINWIT_LP_H

#include <cstddef>
#include <vector>

#include "minwit/rational.h"

namespace minwit::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
    std::vector<Rational> coeffs;
    Sense sense = Sense::kLessEqual;
    Rational rhs;
};

/// Optimise `objective . x` subject to `constraints` and x >= 0.
struct Problem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    bool maximize = false;
    std::vector<Constraint> constraints;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
    Status status = Status::kInfeasible;
    Rational objective;
    std::vector<Rational> x;
};

/// Two-phase dense tableau simplex in exact rational arithmetic. Bland's rule
/// is used for both entering and leaving variables, so the method terminates
/// and the returned vertex is a deterministic function of the input order.
Solution solve(const Problem &problem);

}  // namespace minwit::lp

#endif

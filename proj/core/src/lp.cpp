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

#include "minwit/lp.h"

#include <optional>

#include "minwit/errors.h"

namespace minwit::lp {

namespace {

// Rows 0..m-1 are constraints, row m is the objective (reduced costs,
// minimisation form). The last column holds right-hand sides.
class Tableau {
   public:
    Tableau(std::size_t rows, std::size_t cols) : cols_(cols), cells_((rows + 1) * (cols + 1)) {
    }

    Rational &at(std::size_t r, std::size_t c) {
        return cells_[r * (cols_ + 1) + c];
    }
    Rational &rhs(std::size_t r) {
        return at(r, cols_);
    }

    void pivot(std::size_t pr, std::size_t pc, std::size_t total_rows) {
        Rational inv = 1 / at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) {
            if (at(pr, c) != 0) {
                at(pr, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < total_rows; ++r) {
            if (r == pr) {
                continue;
            }
            Rational factor = at(r, pc);
            if (factor == 0) {
                continue;
            }
            for (std::size_t c = 0; c <= cols_; ++c) {
                if (at(pr, c) != 0) {
                    at(r, c) -= factor * at(pr, c);
                }
            }
        }
    }

   private:
    std::size_t cols_;
    std::vector<Rational> cells_;
};

struct Simplex {
    std::size_t m;
    std::size_t cols;
    Tableau t;
    std::vector<std::size_t> basis;
    std::vector<bool> allowed;

    // Runs until optimal; returns false if unbounded.
    bool optimize() {
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t c = 0; c < cols; ++c) {
                if (allowed[c] && t.at(m, c) < 0) {
                    enter = c;
                    break;
                }
            }
            if (!enter) {
                return true;
            }
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t r = 0; r < m; ++r) {
                if (t.at(r, *enter) > 0) {
                    Rational ratio = t.rhs(r) / t.at(r, *enter);
                    if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leave])) {
                        leave = r;
                        best_ratio = ratio;
                    }
                }
            }
            if (!leave) {
                return false;
            }
            t.pivot(*leave, *enter, m + 1);
            basis[*leave] = *enter;
        }
    }
};

}  // namespace

Solution solve(const Problem &problem) {
    const std::size_t n = problem.num_vars;
    if (problem.objective.size() != n) {
        throw DimensionError("lp::solve: objective length differs from num_vars");
    }
    for (const auto &c : problem.constraints) {
        if (c.coeffs.size() != n) {
            throw DimensionError("lp::solve: constraint length differs from num_vars");
        }
    }

    // Normalise to non-negative right-hand sides.
    std::vector<Constraint> rows = problem.constraints;
    for (auto &row : rows) {
        if (row.rhs < 0) {
            for (auto &a : row.coeffs) {
                a = -a;
            }
            row.rhs = -row.rhs;
            if (row.sense == Sense::kLessEqual) {
                row.sense = Sense::kGreaterEqual;
            } else if (row.sense == Sense::kGreaterEqual) {
                row.sense = Sense::kLessEqual;
            }
        }
    }

    const std::size_t m = rows.size();
    std::size_t slack_count = 0, art_count = 0;
    for (const auto &row : rows) {
        if (row.sense != Sense::kEqual) {
            ++slack_count;
        }
        if (row.sense != Sense::kLessEqual) {
            ++art_count;
        }
    }
    const std::size_t cols = n + slack_count + art_count;
    const std::size_t art_begin = n + slack_count;

    Simplex s{m, cols, Tableau(m, cols), std::vector<std::size_t>(m), std::vector<bool>(cols, true)};
    std::size_t next_slack = n, next_art = art_begin;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            s.t.at(r, j) = rows[r].coeffs[j];
        }
        s.t.rhs(r) = rows[r].rhs;
        switch (rows[r].sense) {
            case Sense::kLessEqual:
                s.t.at(r, next_slack) = 1;
                s.basis[r] = next_slack++;
                break;
            case Sense::kGreaterEqual:
                s.t.at(r, next_slack++) = -1;
                s.t.at(r, next_art) = 1;
                s.basis[r] = next_art++;
                break;
            case Sense::kEqual:
                s.t.at(r, next_art) = 1;
                s.basis[r] = next_art++;
                break;
        }
    }

    Solution out;
    // Phase 1: minimise the sum of artificials.
    if (art_count > 0) {
        for (std::size_t c = art_begin; c < cols; ++c) {
            s.t.at(m, c) = 1;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (s.basis[r] >= art_begin) {
                for (std::size_t c = 0; c <= cols; ++c) {
                    if (s.t.at(r, c) != 0) {
                        s.t.at(m, c) -= s.t.at(r, c);
                    }
                }
            }
        }
        s.optimize();
        if (s.t.rhs(m) != 0) {
            out.status = Status::kInfeasible;
            return out;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        for (std::size_t r = 0; r < m; ++r) {
            if (s.basis[r] < art_begin) {
                continue;
            }
            for (std::size_t c = 0; c < art_begin; ++c) {
                if (s.t.at(r, c) != 0) {
                    s.t.pivot(r, c, m + 1);
                    s.basis[r] = c;
                    break;
                }
            }
            // A row with no non-artificial entry is redundant; its artificial
            // stays basic at zero and is never allowed to re-enter.
        }
        for (std::size_t c = art_begin; c < cols; ++c) {
            s.allowed[c] = false;
        }
    }

    // Phase 2 objective row in minimisation form.
    for (std::size_t c = 0; c <= cols; ++c) {
        s.t.at(m, c) = 0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        s.t.at(m, j) = problem.maximize ? -problem.objective[j] : problem.objective[j];
    }
    for (std::size_t r = 0; r < m; ++r) {
        Rational cb = s.t.at(m, s.basis[r]);
        if (cb == 0) {
            continue;
        }
        for (std::size_t c = 0; c <= cols; ++c) {
            if (s.t.at(r, c) != 0) {
                s.t.at(m, c) -= cb * s.t.at(r, c);
            }
        }
    }
    if (!s.optimize()) {
        out.status = Status::kUnbounded;
        return out;
    }

    out.status = Status::kOptimal;
    out.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (s.basis[r] < n) {
            out.x[s.basis[r]] = s.t.rhs(r);
        }
    }
    Rational obj = 0;
    for (std::size_t j = 0; j < n; ++j) {
        obj += problem.objective[j] * out.x[j];
    }
    out.objective = obj;
    return out;
}

}  // namespace minwit::lp

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

#include "minwit/errors.h"
#include "minwit/witness.h"

namespace minwit {

namespace {

constexpr std::size_t kExhaustiveOperatorLimit = 24;
constexpr std::size_t kIndependentSetLimit = 4096;
constexpr double kScoreTolerance = 1e-12;

struct Candidate {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    double score = 0;
    bool biclique = false;
};

std::vector<std::size_t> members(std::uint64_t set) {
    std::vector<std::size_t> out;
    for (; set; set &= set - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    }
    return out;
}

class CutSearch {
   public:
    CutSearch(const std::vector<PauliString> &ops, const std::vector<double> &squares, const Bipartition &cut)
        : ops_(ops), q_(squares), graph_(build_graph(ops, cut).graph) {
    }

    const Graph &graph() const {
        return graph_;
    }

    double score(std::uint64_t a, std::uint64_t b) const {
        return 0.5 * (mean(a) + mean(b));
    }

    bool is_biclique(std::uint64_t a, std::uint64_t b) const {
        for (auto v : members(a)) {
            if ((graph_.neighbors(v) & b) != b) {
                return false;
            }
        }
        return true;
    }

    // Weighted independence number with weights |b| on a and |a| on b must
    // not exceed |a||b|.
    bool valid(std::uint64_t a, std::uint64_t b) const {
        const long long na = std::popcount(a), nb = std::popcount(b);
        std::vector<long long> w(graph_.size(), 0);
        for (auto v : members(a)) {
            w[v] = nb;
        }
        for (auto v : members(b)) {
            w[v] = na;
        }
        Graph sub(graph_.size());
        const std::uint64_t used = a | b;
        for (auto v : members(used)) {
            for (auto u : members(graph_.neighbors(v) & used)) {
                if (u > v) {
                    sub.add_edge(v, u);
                }
            }
        }
        return max_weight_independent_set<long long>(sub, w).value <= na * nb;
    }

    // Orients so class a holds the operator listed first.
    Candidate make(std::uint64_t x, std::uint64_t y) const {
        if (std::countr_zero(y) < std::countr_zero(x)) {
            std::swap(x, y);
        }
        return {x, y, score(x, y), is_biclique(x, y)};
    }

    bool better(const Candidate &c, const Candidate &d) const {
        if (std::abs(c.score - d.score) > kScoreTolerance) {
            return c.score > d.score;
        }
        int sc = std::popcount(c.a | c.b), sd = std::popcount(d.a | d.b);
        if (sc != sd) {
            return sc > sd;
        }
        if (c.biclique != d.biclique) {
            return c.biclique;
        }
        return names(c) < names(d);
    }

    std::optional<Candidate> exhaustive() const {
        auto sets = independent_sets(graph_, graph_.all_vertices(), kIndependentSetLimit);
        sets.erase(sets.begin());  // empty set
        // Visit promising classes first so fewer validity checks are needed.
        std::sort(sets.begin(), sets.end(), [&](std::uint64_t x, std::uint64_t y) {
            double mx = mean(x), my = mean(y);
            if (mx != my) {
                return mx > my;
            }
            return std::popcount(x) > std::popcount(y);
        });
        std::optional<Candidate> best;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                if (sets[i] & sets[j]) {
                    continue;
                }
                if (!has_cross_edge(sets[i], sets[j])) {
                    continue;
                }
                Candidate c = make(sets[i], sets[j]);
                if (best && !better(c, *best)) {
                    continue;
                }
                if (valid(c.a, c.b)) {
                    best = c;
                }
            }
        }
        return best;
    }

    // Grows a biclique from every edge, adding vertices in order of
    // decreasing squared correlation while the class stays independent.
    std::optional<Candidate> greedy() const {
        std::vector<std::size_t> order(ops_.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return q_[x] > q_[y]; });
        std::optional<Candidate> best;
        for (auto [u, v] : graph_.edges()) {
            std::uint64_t a = std::uint64_t{1} << u, b = std::uint64_t{1} << v;
            for (auto k : order) {
                std::uint64_t bit = std::uint64_t{1} << k;
                if ((a | b) & bit) {
                    continue;
                }
                const std::uint64_t nk = graph_.neighbors(k);
                if ((nk & b) == b && (nk & a) == 0) {
                    a |= bit;
                } else if ((nk & a) == a && (nk & b) == 0) {
                    b |= bit;
                }
            }
            Candidate c = make(a, b);
            if ((!best || better(c, *best)) && valid(c.a, c.b)) {
                best = c;
            }
        }
        return best;
    }

   private:
    double mean(std::uint64_t set) const {
        double s = 0;
        for (auto v : members(set)) {
            s += q_[v];
        }
        return s / std::popcount(set);
    }

    bool has_cross_edge(std::uint64_t a, std::uint64_t b) const {
        for (auto v : members(a)) {
            if (graph_.neighbors(v) & b) {
                return true;
            }
        }
        return false;
    }

    std::pair<std::vector<std::string>, std::vector<std::string>> names(const Candidate &c) const {
        std::pair<std::vector<std::string>, std::vector<std::string>> out;
        for (auto v : members(c.a)) {
            out.first.push_back(ops_[v].str());
        }
        for (auto v : members(c.b)) {
            out.second.push_back(ops_[v].str());
        }
        std::sort(out.first.begin(), out.first.end());
        std::sort(out.second.begin(), out.second.end());
        return out;
    }

    const std::vector<PauliString> &ops_;
    const std::vector<double> &q_;
    Graph graph_;
};

std::vector<PauliString> sorted_ops(const std::vector<PauliString> &ops, std::uint64_t set) {
    std::vector<PauliString> out;
    for (auto v : members(set)) {
        out.push_back(ops[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool criterion_is_valid(const CutCriterion &c) {
    if (c.class_a.empty() || c.class_b.empty()) {
        return false;
    }
    std::vector<PauliString> ops = c.class_a;
    ops.insert(ops.end(), c.class_b.begin(), c.class_b.end());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (ops[i] == ops[j]) {
                return false;
            }
        }
    }
    auto g = build_graph(ops, c.cut);
    const long long na = static_cast<long long>(c.class_a.size());
    const long long nb = static_cast<long long>(c.class_b.size());
    std::vector<long long> w(ops.size(), na);
    std::fill(w.begin(), w.begin() + na, nb);
    return max_weight_independent_set<long long>(g.graph, w).value <= na * nb;
}

double criterion_ideal_score(const CutCriterion &c, const CorrelationSet &corrs) {
    auto mean = [&](const std::vector<PauliString> &cls) {
        double s = 0;
        for (const auto &p : cls) {
            double t = corrs.value(p);
            s += t * t;
        }
        return s / static_cast<double>(cls.size());
    };
    if (c.class_a.empty() || c.class_b.empty()) {
        throw ArgumentError("criterion for cut " + c.cut.str() + " is unavailable");
    }
    return 0.5 * (mean(c.class_a) + mean(c.class_b));
}

std::vector<CutCriterion> build_cut_criteria(const std::vector<PauliString> &ops, const CorrelationSet &corrs,
                                             const std::vector<Bipartition> &cuts) {
    std::vector<double> squares;
    squares.reserve(ops.size());
    for (const auto &p : ops) {
        double t = corrs.value(p);
        squares.push_back(t * t);
    }
    std::vector<CutCriterion> out;
    for (const auto &cut : cuts) {
        CutSearch search(ops, squares, cut);
        CutCriterion crit;
        crit.cut = cut;
        std::optional<Candidate> best;
        if (search.graph().edge_count() > 0) {
            if (ops.size() <= kExhaustiveOperatorLimit) {
                try {
                    best = search.exhaustive();
                } catch (const ConstructionError &) {
                    best = search.greedy();
                }
            } else {
                best = search.greedy();
            }
        }
        if (!best) {
            crit.available = false;
            crit.biclique = false;
            crit.ideal_score = 0;
        } else {
            crit.class_a = sorted_ops(ops, best->a);
            crit.class_b = sorted_ops(ops, best->b);
            crit.biclique = best->biclique;
            crit.ideal_score = best->score;
        }
        out.push_back(std::move(crit));
    }
    return out;
}

}  // namespace minwit

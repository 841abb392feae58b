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

#ifndef MINWIT_GRAPH_H
#define MINWIT_GRAPH_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "minwit/errors.h"

namespace minwit {

/// Simple undirected graph on at most 64 vertices, adjacency as bitmasks.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t num_vertices);

    std::size_t size() const {
        return adj_.size();
    }
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const {
        return (adj_[u] >> v) & 1;
    }
    std::uint64_t neighbors(std::size_t v) const {
        return adj_[v];
    }
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::uint64_t all_vertices() const;
    bool is_independent(std::uint64_t set) const;

   private:
    std::vector<std::uint64_t> adj_;
};

/// Every maximal independent set, as vertex bitmasks, in discovery order.
/// Throws ConstructionError when more than `limit` sets exist.
std::vector<std::uint64_t> maximal_independent_sets(const Graph &g, std::size_t limit = 1u << 20);

/// Every independent set restricted to `within` (including the empty set).
std::vector<std::uint64_t> independent_sets(const Graph &g, std::uint64_t within, std::size_t limit = 1u << 22);

template <typename Weight>
struct IndependentSetResult {
    Weight value{};
    std::uint64_t members = 0;
};

namespace detail {

template <typename Weight>
struct MwisSearch {
    const Graph &g;
    std::span<const Weight> w;
    Weight best{};
    std::uint64_t best_set = 0;

    Weight sum(std::uint64_t set) const {
        Weight s{};
        while (set) {
            s += w[static_cast<std::size_t>(std::countr_zero(set))];
            set &= set - 1;
        }
        return s;
    }

    void run(std::uint64_t cand, std::uint64_t chosen, const Weight &value) {
        // Vertices with no neighbour among the candidates are always taken.
        std::uint64_t free = 0;
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(rest));
            if ((g.neighbors(v) & cand) == 0) {
                free |= std::uint64_t{1} << v;
            }
        }
        Weight cur = value + sum(free);
        chosen |= free;
        cand &= ~free;
        if (cand == 0) {
            if (cur > best || (cur == best && chosen < best_set)) {
                best = cur;
                best_set = chosen;
            }
            return;
        }
        if (cur + sum(cand) < best) {
            return;
        }
        // Branch on the candidate of highest degree inside the candidate set.
        std::size_t pivot = 0;
        int best_deg = -1;
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(rest));
            int d = std::popcount(g.neighbors(v) & cand);
            if (d > best_deg) {
                best_deg = d;
                pivot = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pivot;
        run(cand & ~bit & ~g.neighbors(pivot), chosen | bit, cur + w[pivot]);
        run(cand & ~bit, chosen, cur);
    }
};

}  // namespace detail

/// Exact maximum-weight independent set by branch and bound.
/// Ties are broken towards the numerically smallest member bitmask.
template <typename Weight>
IndependentSetResult<Weight> max_weight_independent_set(const Graph &g, std::span<const Weight> weights) {
    if (weights.size() != g.size()) {
        throw DimensionError("max_weight_independent_set: weight count differs from vertex count");
    }
    detail::MwisSearch<Weight> search{g, weights};
    search.best = Weight{};
    search.best_set = 0;
    search.run(g.all_vertices(), 0, Weight{});
    return {search.best, search.best_set};
}

}  // namespace minwit

#endif

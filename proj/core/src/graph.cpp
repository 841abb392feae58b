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

#include "minwit/graph.h"

namespace minwit {

Graph::Graph(std::size_t num_vertices) : adj_(num_vertices, 0) {
    if (num_vertices > 64) {
        throw ArgumentError("Graph supports at most 64 vertices, got " + std::to_string(num_vertices));
    }
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) {
        throw ArgumentError("Graph::add_edge: vertex out of range");
    }
    if (u == v) {
        throw ArgumentError("Graph::add_edge: self loops are not allowed");
    }
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto a : adj_) {
        twice += static_cast<std::size_t>(std::popcount(a));
    }
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = u + 1; v < size(); ++v) {
            if (has_edge(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::uint64_t Graph::all_vertices() const {
    return size() >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size()) - 1);
}

bool Graph::is_independent(std::uint64_t set) const {
    for (std::uint64_t rest = set; rest; rest &= rest - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(rest));
        if (adj_[v] & set) {
            return false;
        }
    }
    return true;
}

namespace {

// Bron-Kerbosch with pivoting, run on the complement graph.
struct MaximalSearch {
    const Graph &g;
    std::uint64_t all;
    std::size_t limit;
    std::vector<std::uint64_t> out;

    std::uint64_t non_neighbors(std::size_t v) const {
        return all & ~g.neighbors(v) & ~(std::uint64_t{1} << v);
    }

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            if (out.size() >= limit) {
                throw ConstructionError("maximal independent set enumeration exceeded limit");
            }
            out.push_back(r);
            return;
        }
        std::size_t pivot = 0;
        int most = -1;
        for (std::uint64_t rest = p | x; rest; rest &= rest - 1) {
            auto u = static_cast<std::size_t>(std::countr_zero(rest));
            int c = std::popcount(p & non_neighbors(u));
            if (c > most) {
                most = c;
                pivot = u;
            }
        }
        for (std::uint64_t rest = p & ~non_neighbors(pivot); rest; rest &= rest - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(rest));
            std::uint64_t bit = std::uint64_t{1} << v;
            run(r | bit, p & non_neighbors(v), x & non_neighbors(v));
            p &= ~bit;
            x |= bit;
        }
    }
};

}  // namespace

std::vector<std::uint64_t> maximal_independent_sets(const Graph &g, std::size_t limit) {
    MaximalSearch search{g, g.all_vertices(), limit, {}};
    if (g.size() == 0) {
        return {0};
    }
    search.run(0, search.all, 0);
    return search.out;
}

std::vector<std::uint64_t> independent_sets(const Graph &g, std::uint64_t within, std::size_t limit) {
    std::vector<std::uint64_t> out;
    // Depth-first over vertices in ascending order; `cand` holds vertices still addable.
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t chosen, std::uint64_t cand) {
        if (out.size() >= limit) {
            throw ConstructionError("independent set enumeration exceeded limit");
        }
        out.push_back(chosen);
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(rest));
            std::uint64_t higher = (v >= 63) ? 0 : (~std::uint64_t{0} << (v + 1));
            rec(chosen | (std::uint64_t{1} << v), cand & higher & ~g.neighbors(v));
        }
    };
    rec(0, within & g.all_vertices());
    return out;
}

}  // namespace minwit

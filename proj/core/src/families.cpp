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
#include <cctype>
#include <functional>

#include "minwit/errors.h"
#include "minwit/state.h"
#include "minwit/witness.h"

namespace minwit {

namespace {

Rational pow2(std::size_t k) {
    boost::multiprecision::cpp_int v = 1;
    v <<= static_cast<unsigned>(k);
    return Rational(v);
}

std::vector<PauliString> parse_all(std::initializer_list<const char *> digits) {
    std::vector<PauliString> out;
    for (const char *d : digits) {
        out.push_back(PauliString::from_digits(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CutCriterion criterion(const Bipartition &cut, std::vector<PauliString> a, std::vector<PauliString> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CutCriterion c;
    c.cut = cut;
    c.class_a = std::move(a);
    c.class_b = std::move(b);
    c.biclique = true;
    for (const auto &p : c.class_a) {
        for (const auto &q : c.class_b) {
            c.biclique = c.biclique && cut_anticommutes(p, q, cut);
        }
    }
    return c;
}

// Two-site X (or Y) strings on four qubits.
std::vector<PauliString> pair_ops(char digit, const std::function<bool(std::size_t, std::size_t)> &keep) {
    std::vector<PauliString> out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (keep(i, j)) {
                std::string s(4, '0');
                s[i] = s[j] = digit;
                out.push_back(PauliString::from_digits(s));
            }
        }
    }
    return out;
}

bool crosses(const Bipartition &cut, std::size_t i, std::size_t j) {
    return ((cut.side_a() >> i) & 1) != ((cut.side_a() >> j) & 1);
}

std::size_t single_site(const Bipartition &cut) {
    std::uint64_t small = std::popcount(cut.side_a()) == 1 ? cut.side_a() : cut.side_b();
    return static_cast<std::size_t>(std::countr_zero(small));
}

bool is_one_vs_rest(const Bipartition &cut) {
    return std::popcount(cut.side_a()) == 1 || std::popcount(cut.side_b()) == 1;
}

// Even-weight Z strings anticommuting with a full-support non-Z string on side A.
std::vector<PauliString> odd_on_side(const std::vector<PauliString> &z_ops, const Bipartition &cut) {
    std::vector<PauliString> out;
    for (const auto &p : z_ops) {
        if (std::popcount(p.z_mask() & cut.side_a()) & 1) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<PauliString> even_z_strings(std::size_t n) {
    std::vector<PauliString> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        if (std::popcount(m) % 2 == 0) {
            out.push_back(PauliString::from_masks(n, 0, m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string repeat_pattern(std::size_t n, const char *head, char fill) {
    std::string s(n, fill);
    for (std::size_t i = 0; head[i] && i < n; ++i) {
        s[i] = head[i];
    }
    return s;
}

std::string alternating(std::size_t n, char first, char second) {
    std::string s(n, first);
    for (std::size_t i = 1; i < n; i += 2) {
        s[i] = second;
    }
    return s;
}

WitnessSpec make_spec(std::string id, std::size_t n, std::vector<PauliString> ops, std::vector<Rational> weights,
                      Rational g0, Rational g, std::initializer_list<const char *> settings) {
    WitnessSpec w;
    w.id = std::move(id);
    w.num_qubits = n;
    w.operators = std::move(ops);
    w.weights = std::move(weights);
    w.g0 = std::move(g0);
    w.g = std::move(g);
    for (const char *s : settings) {
        w.settings.push_back(MeasurementSetting::from_digits(s));
    }
    return w;
}

}  // namespace

Rational ghz_family_threshold(std::size_t n) {
    if (n < 3) {
        throw ArgumentError("GHZ family needs n >= 3");
    }
    return (pow2(n - 1) - 1) / (pow2(n - 1) + pow2(n - 2) - 1);
}

Rational cluster_family_threshold(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw ArgumentError("cluster family needs an even n >= 4");
    }
    const std::size_t h = n / 2;
    return (pow2(h - 1) + pow2(h) - 2) / (2 * (pow2(h) - 1));
}

NamedFamily parse_named_family(const std::string &name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "ghz4" || s == "ghz") return NamedFamily::kGhz4;
    if (s == "cluster4" || s == "cluster") return NamedFamily::kCluster4;
    if (s == "dicke42" || s == "dicke") return NamedFamily::kDicke42;
    if (s == "singlet4" || s == "singlet") return NamedFamily::kSinglet4;
    if (s == "w4" || s == "w") return NamedFamily::kW4;
    throw ArgumentError("unknown named family '" + name + "'");
}

std::string named_family_name(NamedFamily family) {
    switch (family) {
        case NamedFamily::kGhz4:
            return "ghz4";
        case NamedFamily::kCluster4:
            return "cluster4";
        case NamedFamily::kDicke42:
            return "dicke42";
        case NamedFamily::kSinglet4:
            return "singlet4";
        case NamedFamily::kW4:
            return "w4";
    }
    return "unknown";
}

NamedCriteria named_criteria(NamedFamily family) {
    const auto cuts = enumerate_bipartitions(4);
    NamedCriteria out;
    const PauliString xxxx = PauliString::from_digits("1111");
    const PauliString yyyy = PauliString::from_digits("2222");
    const PauliString zzzz = PauliString::from_digits("3333");
    switch (family) {
        case NamedFamily::kGhz4: {
            auto z_ops = even_z_strings(4);
            const PauliString flip = PauliString::from_digits("1221");
            for (const auto &cut : cuts) {
                out.per_cut.push_back(criterion(cut, odd_on_side(z_ops, cut), {flip}));
            }
            auto ops = z_ops;
            ops.push_back(flip);
            std::vector<Rational> weights(7, Rational(1));
            weights.push_back(4);
            out.combined = make_spec("ghz4", 4, ops, weights, 11, 7, {"3333", "1221"});
            out.combined->per_cut_criteria = out.per_cut;
            break;
        }
        case NamedFamily::kCluster4: {
            const char *lists[7][2][3] = {
                {{"1103", "1130", nullptr}, {"3011", "3300", nullptr}},
                {{"1103", "1130", nullptr}, {"0311", "3300", nullptr}},
                {{"0033", "1130", nullptr}, {"0311", "3011", nullptr}},
                {{"0033", "1103", nullptr}, {"0311", "3011", nullptr}},
                {{"1103", "1130", nullptr}, {"0311", "3011", nullptr}},
                {{"0033", "1103", "1130"}, {"0311", "3011", "3300"}},
                {{"0033", "1103", "1130"}, {"0311", "3011", "3300"}},
            };
            for (std::size_t r = 0; r < cuts.size(); ++r) {
                std::vector<PauliString> a, b;
                for (const char *d : lists[r][0]) {
                    if (d) a.push_back(PauliString::from_digits(d));
                }
                for (const char *d : lists[r][1]) {
                    if (d) b.push_back(PauliString::from_digits(d));
                }
                out.per_cut.push_back(criterion(cuts[r], a, b));
            }
            std::vector<PauliString> ops = parse_all({"0033", "1103", "1130"});
            for (const auto &p : parse_all({"0311", "3011", "3300"})) {
                ops.push_back(p);
            }
            out.combined = make_spec("cluster4", 4, ops, std::vector<Rational>(6, Rational(1)), 6, 4, {"1133", "3311"});
            out.combined->per_cut_criteria = out.per_cut;
            break;
        }
        case NamedFamily::kDicke42:
        case NamedFamily::kSinglet4: {
            for (const auto &cut : cuts) {
                if (is_one_vs_rest(cut)) {
                    out.per_cut.push_back(criterion(cut, {xxxx}, {yyyy}));
                    continue;
                }
                auto cross = pair_ops('1', [&](std::size_t i, std::size_t j) { return crosses(cut, i, j); });
                // The singlet reaches only 1/3 on T_1100 and T_0011, so they
                // are left out of the AC|BD and AD|BC criteria.
                if (family == NamedFamily::kSinglet4 && cut.side_a() != 0b0011) {
                    cross.erase(std::remove_if(cross.begin(), cross.end(),
                                               [](const PauliString &p) {
                                                   return p.str() == "1100" || p.str() == "0011";
                                               }),
                                cross.end());
                }
                out.per_cut.push_back(criterion(cut, cross, {yyyy}));
            }
            if (family == NamedFamily::kDicke42) {
                std::vector<PauliString> ops = pair_ops('1', [](std::size_t, std::size_t) { return true; });
                ops.push_back(xxxx);
                std::sort(ops.begin(), ops.end());
                auto ys = pair_ops('2', [](std::size_t, std::size_t) { return true; });
                ys.push_back(yyyy);
                std::sort(ys.begin(), ys.end());
                ops.insert(ops.end(), ys.begin(), ys.end());
                std::vector<Rational> weights;
                for (const auto &p : ops) {
                    weights.push_back(p.weight() == 4 ? 2 : 1);
                }
                out.combined = make_spec("dicke42", 4, ops, weights, 10, 8, {"1111", "2222"});
                out.combined->per_cut_criteria = out.per_cut;
            } else {
                std::vector<PauliString> ops = {xxxx};
                for (const auto &p : parse_all({"0303", "0330", "3003", "3030", "3333"})) {
                    ops.push_back(p);
                }
                std::vector<Rational> weights = {4, 1, 1, 1, 1, 2};
                out.combined = make_spec("singlet4", 4, ops, weights, 10, 6, {"1111", "3333"});
                out.combined->bound_kind = BoundKind::kFullySeparable;
            }
            break;
        }
        case NamedFamily::kW4: {
            for (const auto &cut : cuts) {
                std::vector<PauliString> pairs;
                if (is_one_vs_rest(cut)) {
                    const std::size_t s = single_site(cut);
                    pairs = pair_ops('1', [s](std::size_t i, std::size_t j) { return i == s || j == s; });
                } else {
                    pairs = pair_ops('1', [&](std::size_t i, std::size_t j) { return crosses(cut, i, j); });
                }
                out.per_cut.push_back(criterion(cut, {zzzz}, pairs));
            }
            break;
        }
    }
    if (out.combined) {
        out.combined->metadata["source"] = "named";
    }
    return out;
}

WitnessSpec nqubit_ghz_witness(std::size_t n, bool with_cut_criteria) {
    if (n < 3) {
        throw ArgumentError("nqubit_ghz_witness: n must be at least 3");
    }
    if (n > 20) {
        throw ArgumentError("nqubit_ghz_witness: n must be at most 20");
    }
    auto z_ops = even_z_strings(n);
    const PauliString flip = PauliString::from_digits(repeat_pattern(n, "22", '1'));
    WitnessSpec w;
    w.id = "ghz" + std::to_string(n);
    w.num_qubits = n;
    w.operators = z_ops;
    w.operators.push_back(flip);
    w.weights.assign(z_ops.size(), Rational(1));
    w.weights.push_back(pow2(n - 2));
    w.g0 = pow2(n - 1) + pow2(n - 2) - 1;
    w.g = pow2(n - 1) - 1;
    w.settings = {MeasurementSetting::from_digits(std::string(n, '3')), MeasurementSetting::from_pauli(flip)};
    w.metadata["bounds"] = "closed_form";
    if (with_cut_criteria && n <= 8) {
        for (const auto &cut : enumerate_bipartitions(n)) {
            w.per_cut_criteria.push_back(criterion(cut, odd_on_side(z_ops, cut), {flip}));
        }
    }
    return w;
}

WitnessSpec nqubit_cluster_witness(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw ArgumentError("nqubit_cluster_witness: n must be even and at least 4");
    }
    if (n > 20) {
        throw ArgumentError("nqubit_cluster_witness: n must be at most 20");
    }
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    WitnessSpec w;
    w.id = "cluster" + std::to_string(n);
    w.num_qubits = n;
    for (std::size_t parity = 0; parity < 2; ++parity) {
        std::uint64_t sites = 0;
        for (std::size_t i = parity; i < n; i += 2) {
            sites |= std::uint64_t{1} << i;
        }
        std::vector<PauliString> group;
        // Every nonempty product of the generators X_i Z_{i-1} Z_{i+1} on sites of one parity.
        for (std::uint64_t sub = sites; sub; sub = (sub - 1) & sites) {
            const std::uint64_t z = ((sub << 1) ^ (sub >> 1)) & all;
            group.push_back(PauliString::from_masks(n, sub, z));
        }
        std::sort(group.begin(), group.end());
        w.operators.insert(w.operators.end(), group.begin(), group.end());
    }
    const std::size_t h = n / 2;
    w.weights.assign(w.operators.size(), Rational(1));
    w.g0 = 2 * (pow2(h) - 1);
    w.g = pow2(h - 1) + pow2(h) - 2;
    w.settings = {MeasurementSetting::from_digits(alternating(n, '1', '3')),
                  MeasurementSetting::from_digits(alternating(n, '3', '1'))};
    w.metadata["bounds"] = "closed_form";
    if (n <= 6) {
        auto psi = make_state(StateFamily::kClusterStabilizer, n);
        w.per_cut_criteria = build_cut_criteria(w.operators, correlations_for(psi, w.operators), enumerate_bipartitions(n));
    }
    return w;
}

}  // namespace minwit

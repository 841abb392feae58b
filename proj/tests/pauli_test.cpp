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

#include <bit>
#include <random>
#include <set>

#include "minwit/errors.h"
#include "minwit/pauli.h"
#include "reference.h"

namespace minwit {
namespace {

bool dense_commute(const std::string &a, const std::string &b) {
    Eigen::MatrixXcd pa = reference::dense(a);
    Eigen::MatrixXcd pb = reference::dense(b);
    return (pa * pb - pb * pa).norm() < 1e-12;
}

TEST(PauliString, DigitsRoundTrip) {
    auto p = PauliString::from_digits("1221");
    EXPECT_EQ(p.str(), "1221");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.weight(), 4u);
    EXPECT_EQ(p.y_count(), 2u);
    EXPECT_EQ(p.digit(0), 1);
    EXPECT_EQ(p.digit(1), 2);
    EXPECT_EQ(p.x_mask(), 0b1111u);
    EXPECT_EQ(p.z_mask(), 0b0110u);
    EXPECT_TRUE(PauliString::from_digits("0000").is_identity());
    EXPECT_EQ(PauliString::from_masks(3, 0b001, 0b100).str(), "103");
}

TEST(PauliString, RejectsBadInput) {
    EXPECT_THROW(PauliString::from_digits("12a4"), ArgumentError);
    EXPECT_THROW(PauliString::from_digits(""), ArgumentError);
    EXPECT_THROW(PauliString::from_masks(2, 0b100, 0), ArgumentError);
    EXPECT_THROW(commutes(PauliString::from_digits("11"), PauliString::from_digits("111")), DimensionError);
}

TEST(PauliString, OrderingIsLexicographic) {
    std::set<PauliString> s{PauliString::from_digits("1221"), PauliString::from_digits("0303"),
                            PauliString::from_digits("0033")};
    std::vector<std::string> got;
    for (const auto &p : s) {
        got.push_back(p.str());
    }
    EXPECT_EQ(got, (std::vector<std::string>{"0033", "0303", "1221"}));
}

TEST(PauliString, CommutationMatchesDenseMatrices) {
    auto all = reference::all_digit_strings(3);
    for (const auto &a : all) {
        for (const auto &b : all) {
            EXPECT_EQ(commutes(PauliString::from_digits(a), PauliString::from_digits(b)), dense_commute(a, b))
                << a << " " << b;
        }
    }
}

TEST(PauliString, CommutationExamples) {
    EXPECT_TRUE(commutes(PauliString::from_digits("3333"), PauliString::from_digits("1221")));
    EXPECT_FALSE(commutes(PauliString::from_digits("3000"), PauliString::from_digits("1000")));
}

TEST(Bipartition, ParseAndDisplay) {
    auto c = Bipartition::from_string("A|BCD");
    EXPECT_EQ(c.num_qubits(), 4u);
    EXPECT_EQ(c.side_a(), 0b0001u);
    EXPECT_EQ(c.side_b(), 0b1110u);
    EXPECT_EQ(c.str(), "A|BCD");
    // The side holding site 0 is stored; display puts the smaller side first.
    auto d = Bipartition::from_string("BCD|A");
    EXPECT_EQ(c, d);
    EXPECT_EQ(Bipartition::from_string("ABC|D").str(), "D|ABC");
    EXPECT_THROW(Bipartition::from_string("AB|B"), ArgumentError);
    EXPECT_THROW(Bipartition::from_string("ABCD"), ArgumentError);
    EXPECT_THROW(Bipartition::from_string("AB|D"), ArgumentError);
}

TEST(Bipartition, EnumerationCounts) {
    for (std::size_t n = 2; n <= 10; ++n) {
        auto cuts = enumerate_bipartitions(n);
        EXPECT_EQ(cuts.size(), (std::size_t{1} << (n - 1)) - 1);
        std::set<std::uint64_t> distinct;
        for (const auto &c : cuts) {
            distinct.insert(c.side_a());
            EXPECT_TRUE(c.side_a() & 1u);
        }
        EXPECT_EQ(distinct.size(), cuts.size());
    }
    std::vector<std::string> names;
    for (const auto &c : enumerate_bipartitions(4)) {
        names.push_back(c.str());
    }
    EXPECT_EQ(names, (std::vector<std::string>{"A|BCD", "B|ACD", "C|ABD", "D|ABC", "AB|CD", "AC|BD", "AD|BC"}));
    EXPECT_THROW(enumerate_bipartitions(1), ArgumentError);
}

TEST(CutAnticommutes, MatchesRestrictedDenseCheck) {
    std::mt19937_64 rng(7);
    auto cuts = enumerate_bipartitions(4);
    for (int t = 0; t < 300; ++t) {
        auto a = reference::random_digits(4, rng);
        auto b = reference::random_digits(4, rng);
        auto pa = PauliString::from_digits(a);
        auto pb = PauliString::from_digits(b);
        for (const auto &cut : cuts) {
            std::string a_on_a;
            std::string b_on_a;
            std::string a_on_b;
            std::string b_on_b;
            for (auto s : cut.sites_a()) {
                a_on_a.push_back(a[s]);
                b_on_a.push_back(b[s]);
            }
            for (auto s : cut.sites_b()) {
                a_on_b.push_back(a[s]);
                b_on_b.push_back(b[s]);
            }
            // Anticommuting locally on side A or on side B.
            bool expected = !dense_commute(a_on_a, b_on_a) || !dense_commute(a_on_b, b_on_b);
            EXPECT_EQ(cut_anticommutes(pa, pb, cut), expected) << a << " " << b << " " << cut.str();
            EXPECT_EQ(restrict(pa, cut.sites_a()).str(), a_on_a);
        }
    }
}

TEST(CutAnticommutes, PaperPairs) {
    auto z = PauliString::from_digits("3333");
    auto y = PauliString::from_digits("1221");
    EXPECT_TRUE(commutes(z, y));
    for (const auto &cut : enumerate_bipartitions(4)) {
        // Across a 1:3 cut one side holds a single anticommuting site; across
        // a 2:2 cut each side holds two, so the restrictions commute.
        bool single = std::popcount(cut.side_a()) == 1 || std::popcount(cut.side_b()) == 1;
        EXPECT_EQ(cut_anticommutes(z, y, cut), single) << cut.str();
    }
    EXPECT_FALSE(cut_anticommutes(PauliString::from_digits("3300"), PauliString::from_digits("0033"),
                                  Bipartition::from_string("AB|CD")));
}

TEST(MeasurementSetting, DerivableIndices) {
    auto m = MeasurementSetting::from_digits("3333");
    auto d = derivable_indices(m);
    EXPECT_EQ(d.size(), 16u);
    std::set<std::string> names;
    for (const auto &p : d) {
        names.insert(p.str());
    }
    EXPECT_TRUE(names.count("0000"));
    EXPECT_TRUE(names.count("0033"));
    EXPECT_TRUE(names.count("3333"));
    EXPECT_TRUE(is_derivable(PauliString::from_digits("1001"), MeasurementSetting::from_digits("1221")));
    EXPECT_FALSE(is_derivable(PauliString::from_digits("3001"), MeasurementSetting::from_digits("1221")));
    EXPECT_THROW(MeasurementSetting::from_digits("3303"), ArgumentError);
}

}  // namespace
}  // namespace minwit

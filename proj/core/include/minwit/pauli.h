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

#ifndef MINWIT_PAULI_H
#define MINWIT_PAULI_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minwit {

inline constexpr std::size_t kMaxQubits = 64;

/// Tensor product of single-qubit Paulis, stored symplectically.
///
/// Site `i` (0-based, qubit A is site 0) carries the digit
/// 0 = I, 1 = X, 2 = Y, 3 = Z. Bit `i` of `x_mask()` / `z_mask()` is set when
/// that site has an X / Z component (Y has both). Phases are not tracked.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` sites.
    explicit PauliString(std::size_t num_qubits);

    static PauliString from_digits(std::string_view digits);
    static PauliString from_masks(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    std::size_t num_qubits() const {
        return n_;
    }
    std::uint64_t x_mask() const {
        return x_;
    }
    std::uint64_t z_mask() const {
        return z_;
    }
    std::uint64_t support_mask() const {
        return x_ | z_;
    }
    int digit(std::size_t site) const;
    bool is_identity() const {
        return (x_ | z_) == 0;
    }
    std::size_t weight() const;
    /// Number of Y sites.
    std::size_t y_count() const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    /// Lexicographic by digit string ("0033" < "0303" < "1221").
    std::strong_ordering operator<=>(const PauliString &other) const;

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// One local Pauli basis (digit 1..3) on every site.
class MeasurementSetting {
   public:
    MeasurementSetting() = default;
    static MeasurementSetting from_digits(std::string_view digits);
    static MeasurementSetting from_pauli(const PauliString &full_weight);

    std::size_t num_qubits() const {
        return basis_.num_qubits();
    }
    int local(std::size_t site) const {
        return basis_.digit(site);
    }
    /// The full-weight Pauli string σ_k.
    const PauliString &as_pauli() const {
        return basis_;
    }
    std::string str() const {
        return basis_.str();
    }
    bool operator==(const MeasurementSetting &other) const = default;
    std::strong_ordering operator<=>(const MeasurementSetting &other) const {
        return basis_ <=> other.basis_;
    }

   private:
    explicit MeasurementSetting(PauliString p) : basis_(p) {
    }
    PauliString basis_;
};

/// A cut A|B. The stored side is the one containing site 0.
class Bipartition {
   public:
    Bipartition() = default;
    /// `side_mask` may name either side; it is canonicalised.
    static Bipartition from_mask(std::size_t num_qubits, std::uint64_t side_mask);
    /// Parses letter groups such as "AB|CD" (A = site 0). Every letter
    /// A..(A+n-1) must appear exactly once.
    static Bipartition from_string(std::string_view text);

    std::size_t num_qubits() const {
        return n_;
    }
    std::uint64_t side_a() const {
        return a_;
    }
    std::uint64_t side_b() const;
    std::vector<std::size_t> sites_a() const;
    std::vector<std::size_t> sites_b() const;

    /// Smaller side first; on equal sizes the side holding A comes first.
    std::string str() const;

    bool operator==(const Bipartition &other) const = default;

   private:
    std::size_t n_ = 0;
    std::uint64_t a_ = 0;
};

bool commutes(const PauliString &p, const PauliString &q);

/// True iff p and q anticommute after restriction to the sites in `mask`.
bool anticommutes_on(const PauliString &p, const PauliString &q, std::uint64_t mask);

/// Digits of `p` at `sites` (0-based, any order; result uses ascending order).
PauliString restrict(const PauliString &p, std::span<const std::size_t> sites);

bool cut_anticommutes(const PauliString &p, const PauliString &q, const Bipartition &cut);

/// All 2^N strings whose digit at each site is 0 or the setting's local basis.
std::vector<PauliString> derivable_indices(const MeasurementSetting &setting);

bool is_derivable(const PauliString &p, const MeasurementSetting &setting);

/// All 2^(n-1)-1 cuts: by size of the smaller side, then lexicographically.
/// For n = 4: A|BCD, B|ACD, C|ABD, D|ABC, AB|CD, AC|BD, AD|BC.
std::vector<Bipartition> enumerate_bipartitions(std::size_t n);

}  // namespace minwit

template <>
struct std::hash<minwit::PauliString> {
    std::size_t operator()(const minwit::PauliString &p) const noexcept {
        std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
        h ^= p.z_mask() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ p.num_qubits());
    }
};

#endif

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

#include "minwit/pauli.h"

#include <algorithm>
#include <bit>

#include "minwit/errors.h"

namespace minwit {

namespace {

void check_size(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw ArgumentError("qubit count must be in 1.." + std::to_string(kMaxQubits) + ", got " + std::to_string(n));
    }
}

std::uint64_t low_bits(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli strings differ in size: " + p.str() + " vs " + q.str());
    }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits) : n_(num_qubits) {
    check_size(num_qubits);
}

PauliString PauliString::from_digits(std::string_view digits) {
    PauliString p(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        switch (digits[i]) {
            case '0':
                break;
            case '1':
                p.x_ |= bit;
                break;
            case '2':
                p.x_ |= bit;
                p.z_ |= bit;
                break;
            case '3':
                p.z_ |= bit;
                break;
            default:
                throw ArgumentError("invalid Pauli digit '" + std::string(1, digits[i]) + "' in \"" +
                                    std::string(digits) + "\"");
        }
    }
    return p;
}

PauliString PauliString::from_masks(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask) {
    PauliString p(num_qubits);
    if (((x_mask | z_mask) & ~low_bits(num_qubits)) != 0) {
        throw ArgumentError("Pauli masks exceed qubit count");
    }
    p.x_ = x_mask;
    p.z_ = z_mask;
    return p;
}

int PauliString::digit(std::size_t site) const {
    if (site >= n_) {
        throw ArgumentError("site " + std::to_string(site) + " out of range for " + std::to_string(n_) + " qubits");
    }
    int x = static_cast<int>((x_ >> site) & 1);
    int z = static_cast<int>((z_ >> site) & 1);
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::size_t PauliString::y_count() const {
    return static_cast<std::size_t>(std::popcount(x_ & z_));
}

std::string PauliString::str() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        out[i] = static_cast<char>('0' + digit(i));
    }
    return out;
}

std::strong_ordering PauliString::operator<=>(const PauliString &other) const {
    std::size_t common = std::min(n_, other.n_);
    for (std::size_t i = 0; i < common; ++i) {
        if (auto c = digit(i) <=> other.digit(i); c != 0) {
            return c;
        }
    }
    return n_ <=> other.n_;
}

MeasurementSetting MeasurementSetting::from_digits(std::string_view digits) {
    return from_pauli(PauliString::from_digits(digits));
}

MeasurementSetting MeasurementSetting::from_pauli(const PauliString &full_weight) {
    if (full_weight.weight() != full_weight.num_qubits()) {
        throw ArgumentError("measurement setting " + full_weight.str() + " has an identity site");
    }
    return MeasurementSetting(full_weight);
}

Bipartition Bipartition::from_mask(std::size_t num_qubits, std::uint64_t side_mask) {
    check_size(num_qubits);
    if (num_qubits < 2) {
        throw ArgumentError("a bipartition needs at least 2 qubits");
    }
    std::uint64_t all = low_bits(num_qubits);
    if ((side_mask & ~all) != 0) {
        throw ArgumentError("bipartition side names sites beyond qubit count");
    }
    if (side_mask == 0 || side_mask == all) {
        throw ArgumentError("bipartition sides must both be nonempty");
    }
    Bipartition b;
    b.n_ = num_qubits;
    b.a_ = (side_mask & 1) ? side_mask : (all & ~side_mask);
    return b;
}

Bipartition Bipartition::from_string(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
        throw ArgumentError("bipartition \"" + std::string(text) + "\" must contain exactly one '|'");
    }
    std::uint64_t left = 0, seen = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == bar) {
            continue;
        }
        char c = text[i];
        if (c < 'A' || c > 'Z') {
            throw ArgumentError("bipartition \"" + std::string(text) + "\" contains invalid letter");
        }
        std::uint64_t bit = std::uint64_t{1} << (c - 'A');
        if (seen & bit) {
            throw ArgumentError("bipartition \"" + std::string(text) + "\" repeats a letter");
        }
        seen |= bit;
        if (i < bar) {
            left |= bit;
        }
    }
    auto n = static_cast<std::size_t>(std::popcount(seen));
    if (seen != low_bits(n)) {
        throw ArgumentError("bipartition \"" + std::string(text) + "\" skips a letter");
    }
    return from_mask(n, left);
}

std::uint64_t Bipartition::side_b() const {
    return low_bits(n_) & ~a_;
}

namespace {

std::vector<std::size_t> mask_sites(std::uint64_t mask) {
    std::vector<std::size_t> out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::string mask_letters(std::uint64_t mask) {
    std::string out;
    for (auto s : mask_sites(mask)) {
        out.push_back(static_cast<char>('A' + s));
    }
    return out;
}

}  // namespace

std::vector<std::size_t> Bipartition::sites_a() const {
    return mask_sites(a_);
}

std::vector<std::size_t> Bipartition::sites_b() const {
    return mask_sites(side_b());
}

std::string Bipartition::str() const {
    if (n_ > 26) {
        throw ArgumentError("letter notation supports at most 26 qubits");
    }
    std::uint64_t a = a_, b = side_b();
    if (std::popcount(b) < std::popcount(a)) {
        std::swap(a, b);
    }
    return mask_letters(a) + "|" + mask_letters(b);
}

bool commutes(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    return !anticommutes_on(p, q, ~std::uint64_t{0});
}

bool anticommutes_on(const PauliString &p, const PauliString &q, std::uint64_t mask) {
    std::uint64_t sym = (p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask());
    return (std::popcount(sym & mask) & 1) != 0;
}

PauliString restrict(const PauliString &p, std::span<const std::size_t> sites) {
    if (sites.empty()) {
        throw ArgumentError("restrict: empty site subset");
    }
    std::vector<std::size_t> sorted(sites.begin(), sites.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ArgumentError("restrict: repeated site");
    }
    std::string digits;
    for (auto s : sorted) {
        if (s >= p.num_qubits()) {
            throw ArgumentError("restrict: site " + std::to_string(s) + " out of range");
        }
        digits.push_back(static_cast<char>('0' + p.digit(s)));
    }
    return PauliString::from_digits(digits);
}

bool cut_anticommutes(const PauliString &p, const PauliString &q, const Bipartition &cut) {
    check_same_size(p, q);
    if (cut.num_qubits() != p.num_qubits()) {
        throw DimensionError("cut " + cut.str() + " does not match " + std::to_string(p.num_qubits()) + " qubits");
    }
    return anticommutes_on(p, q, cut.side_a()) || anticommutes_on(p, q, cut.side_b());
}

std::vector<PauliString> derivable_indices(const MeasurementSetting &setting) {
    const auto n = setting.num_qubits();
    if (n > 30) {
        throw ArgumentError("derivable_indices: 2^" + std::to_string(n) + " strings is too many to list");
    }
    const auto &k = setting.as_pauli();
    std::vector<PauliString> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
        out.push_back(PauliString::from_masks(n, k.x_mask() & sub, k.z_mask() & sub));
    }
    return out;
}

bool is_derivable(const PauliString &p, const MeasurementSetting &setting) {
    const auto &k = setting.as_pauli();
    if (p.num_qubits() != k.num_qubits()) {
        throw DimensionError("is_derivable: size mismatch");
    }
    std::uint64_t s = p.support_mask();
    return (p.x_mask() == (k.x_mask() & s)) && (p.z_mask() == (k.z_mask() & s));
}

std::vector<Bipartition> enumerate_bipartitions(std::size_t n) {
    if (n < 2) {
        throw ArgumentError("enumerate_bipartitions: need n >= 2");
    }
    if (n > 30) {
        throw ArgumentError("enumerate_bipartitions: too many cuts for n = " + std::to_string(n));
    }
    std::vector<Bipartition> out;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        // Lexicographic k-subsets of {0..n-1}.
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) {
            idx[i] = i;
        }
        while (true) {
            if (!(2 * k == n && idx[0] != 0)) {
                std::uint64_t mask = 0;
                for (auto s : idx) {
                    mask |= std::uint64_t{1} << s;
                }
                out.push_back(Bipartition::from_mask(n, mask));
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return out;
}

}  // namespace minwit

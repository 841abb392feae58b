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

#include "minwit/correlations.h"

#include <algorithm>
#include <cmath>

#include "minwit/errors.h"

namespace minwit {

CorrelationSet::CorrelationSet(std::size_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw ArgumentError("CorrelationSet: qubit count must be in 1..64");
    }
}

void CorrelationSet::set(const PauliString &p, double value, double error) {
    if (p.num_qubits() != n_) {
        throw DimensionError("CorrelationSet: operator " + p.str() + " has wrong length");
    }
    if (!std::isfinite(value) || !std::isfinite(error)) {
        throw ValidationError("correlation " + p.str() + ": non-finite value");
    }
    if (std::abs(value) > 1.0 + 1e-9) {
        throw ValidationError("correlation " + p.str() + ": |value| > 1");
    }
    if (error < 0) {
        throw ValidationError("correlation " + p.str() + ": negative stderr");
    }
    value = std::clamp(value, -1.0, 1.0);
    if (p.is_identity()) {
        if (std::abs(value - 1.0) > 1e-9 || error != 0.0) {
            throw ValidationError("identity correlation must be 1 with zero stderr");
        }
        value = 1.0;
    }
    entries_[p] = Correlation{value, error};
}

const Correlation &CorrelationSet::at(const PauliString &p) const {
    auto it = entries_.find(p);
    if (it == entries_.end()) {
        throw DataError("missing correlation T_" + p.str());
    }
    return it->second;
}

std::optional<Correlation> CorrelationSet::find(const PauliString &p) const {
    auto it = entries_.find(p);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

}  // namespace minwit

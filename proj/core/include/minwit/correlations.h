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

#ifndef MINWIT_CORRELATIONS_H
#define MINWIT_CORRELATIONS_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "minwit/pauli.h"

namespace minwit {

struct Correlation {
    double value = 0.0;
    double error = 0.0;
};

/// Correlation tensor elements T_j with their standard errors.
class CorrelationSet {
   public:
    CorrelationSet() = default;
    explicit CorrelationSet(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t size() const {
        return entries_.size();
    }
    bool empty() const {
        return entries_.empty();
    }

    /// Inserts or replaces an entry. Values within 1e-9 outside [-1, 1] are
    /// clamped; anything further out is a ValidationError.
    void set(const PauliString &p, double value, double error = 0.0);

    bool contains(const PauliString &p) const {
        return entries_.count(p) != 0;
    }
    /// Throws DataError naming the operator when absent.
    const Correlation &at(const PauliString &p) const;
    std::optional<Correlation> find(const PauliString &p) const;
    double value(const PauliString &p) const {
        return at(p).value;
    }

    const std::map<PauliString, Correlation> &entries() const {
        return entries_;
    }

    std::map<std::string, std::string> metadata;

   private:
    std::size_t n_ = 0;
    std::map<PauliString, Correlation> entries_;
};

}  // namespace minwit

#endif

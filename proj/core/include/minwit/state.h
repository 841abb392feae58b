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

#ifndef MINWIT_STATE_H
#define MINWIT_STATE_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minwit/correlations.h"
#include "minwit/pauli.h"

namespace minwit {

using Complex = std::complex<double>;

/// Basis index convention: site i is bit (n - 1 - i) of the index, so the
/// first qubit is the most significant and |0011> is index 3.
class StateVector {
   public:
    StateVector() = default;
    /// Throws ArgumentError unless the norm is 1 within 1e-12.
    StateVector(std::size_t num_qubits, Eigen::VectorXcd amplitudes);
    /// Rescales to unit norm; throws on a zero vector.
    static StateVector normalized(std::size_t num_qubits, Eigen::VectorXcd amplitudes);

    std::size_t num_qubits() const {
        return n_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amps_;
    }

   private:
    std::size_t n_ = 0;
    Eigen::VectorXcd amps_;
};

class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Validates hermiticity and unit trace (1e-12) and positivity (-1e-10).
    DensityMatrix(std::size_t num_qubits, Eigen::MatrixXcd entries);

    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return n_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return m_;
    }

   private:
    struct Unchecked {};
    DensityMatrix(Unchecked, std::size_t num_qubits, Eigen::MatrixXcd entries)
        : n_(num_qubits), m_(std::move(entries)) {
    }
    friend DensityMatrix add_white_noise(const StateVector &psi, double p);
    friend DensityMatrix density_from_correlations(const CorrelationSet &corrs);

    std::size_t n_ = 0;
    Eigen::MatrixXcd m_;
};

enum class StateFamily { kGhz, kCluster4, kClusterStabilizer, kDicke, kW, kSinglet4, kPsi };

struct StateParams {
    std::optional<int> excitations;
    double theta = 0.0;
    double phi = 0.0;
};

StateFamily parse_state_family(std::string_view name);
std::string family_name(StateFamily family);

StateVector make_state(StateFamily family, std::size_t n, const StateParams &params = {});

double correlation(const StateVector &psi, const PauliString &j);
double correlation(const DensityMatrix &rho, const PauliString &j);

CorrelationSet nonvanishing_correlations(const StateVector &psi, double tol = 1e-9);

/// Exact correlations of the listed operators (stderr 0).
CorrelationSet correlations_for(const StateVector &psi, const std::vector<PauliString> &ops);
CorrelationSet correlations_for(const DensityMatrix &rho, const std::vector<PauliString> &ops);

DensityMatrix add_white_noise(const StateVector &psi, double p);

double fidelity(const DensityMatrix &rho, const StateVector &psi);

Complex overlap(const StateVector &a, const StateVector &b);

/// Noise parameter giving white-noise fidelity `target` with an n-qubit pure state.
double noise_for_fidelity(double target, std::size_t n);

/// Descending Schmidt coefficients across the cut.
std::vector<double> schmidt_coefficients(const StateVector &psi, const Bipartition &cut);

DensityMatrix density_from_correlations(const CorrelationSet &corrs);

struct CountsRecord {
    MeasurementSetting setting;
    std::uint64_t shots = 0;
    /// Outcome character i refers to site i; '0' is eigenvalue +1.
    std::map<std::string, std::uint64_t> counts;

    /// Throws DataError when counts are malformed or do not sum to shots.
    void validate() const;
};

/// Outcome probabilities in the local eigenbases of `setting`, indexed by
/// basis index (site i at bit n-1-i).
std::vector<double> outcome_probabilities(const DensityMatrix &rho, const MeasurementSetting &setting);

CountsRecord simulate_counts(const DensityMatrix &rho, const MeasurementSetting &setting, std::int64_t shots,
                             std::uint64_t seed);

namespace detail {
/// Reverses the low n bits: converts between site masks and basis-index masks.
std::uint64_t site_to_basis_mask(std::uint64_t mask, std::size_t n);
}  // namespace detail

}  // namespace minwit

#endif

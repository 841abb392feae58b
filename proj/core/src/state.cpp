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

#include "minwit/state.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <random>

#include "minwit/errors.h"

namespace minwit {

namespace {

constexpr std::size_t kMaxStateQubits = 24;
constexpr std::size_t kMaxDenseQubits = 12;

std::size_t dim(std::size_t n) {
    return std::size_t{1} << n;
}

void require_qubits(std::size_t n, std::size_t limit, const char *what) {
    if (n == 0 || n > limit) {
        throw ArgumentError(std::string(what) + ": qubit count must be in 1.." + std::to_string(limit));
    }
}

Complex i_power(std::size_t k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

Eigen::VectorXcd basis_vector(std::size_t n, std::initializer_list<std::pair<std::size_t, Complex>> terms) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim(n)));
    for (const auto &[index, amp] : terms) {
        v[static_cast<Eigen::Index>(index)] += amp;
    }
    return v;
}

// In-place Walsh-Hadamard transform: out[z] = sum_b in[b] (-1)^{popcount(b & z)}.
void walsh_hadamard(std::vector<Complex> &a) {
    for (std::size_t len = 1; len < a.size(); len <<= 1) {
        for (std::size_t i = 0; i < a.size(); i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                Complex u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
}

}  // namespace

namespace detail {

std::uint64_t site_to_basis_mask(std::uint64_t mask, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1) {
            out |= std::uint64_t{1} << (n - 1 - i);
        }
    }
    return out;
}

}  // namespace detail

StateVector::StateVector(std::size_t num_qubits, Eigen::VectorXcd amplitudes)
    : n_(num_qubits), amps_(std::move(amplitudes)) {
    require_qubits(num_qubits, kMaxStateQubits, "StateVector");
    if (static_cast<std::size_t>(amps_.size()) != dim(n_)) {
        throw DimensionError("StateVector: expected " + std::to_string(dim(n_)) + " amplitudes");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) {
        throw ValidationError("StateVector: amplitudes are not normalised");
    }
}

StateVector StateVector::normalized(std::size_t num_qubits, Eigen::VectorXcd amplitudes) {
    double norm = amplitudes.norm();
    if (!(norm > 0)) {
        throw ArgumentError("StateVector: zero vector");
    }
    return StateVector(num_qubits, amplitudes / norm);
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, Eigen::MatrixXcd entries) : n_(num_qubits), m_(std::move(entries)) {
    require_qubits(num_qubits, kMaxDenseQubits, "DensityMatrix");
    auto d = static_cast<Eigen::Index>(dim(n_));
    if (m_.rows() != d || m_.cols() != d) {
        throw DimensionError("DensityMatrix: expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("DensityMatrix: not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > 1e-12) {
        throw ValidationError("DensityMatrix: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw ValidationError("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    require_qubits(psi.num_qubits(), kMaxDenseQubits, "DensityMatrix");
    return DensityMatrix(Unchecked{}, psi.num_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    require_qubits(num_qubits, kMaxDenseQubits, "DensityMatrix");
    auto d = static_cast<Eigen::Index>(dim(num_qubits));
    return DensityMatrix(Unchecked{}, num_qubits, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

StateFamily parse_state_family(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "ghz") return StateFamily::kGhz;
    if (s == "cluster4") return StateFamily::kCluster4;
    if (s == "cluster") return StateFamily::kClusterStabilizer;
    if (s == "dicke") return StateFamily::kDicke;
    if (s == "w") return StateFamily::kW;
    if (s == "singlet" || s == "singlet4") return StateFamily::kSinglet4;
    if (s == "psi") return StateFamily::kPsi;
    throw ArgumentError("unknown state family '" + std::string(name) + "'");
}

std::string family_name(StateFamily family) {
    switch (family) {
        case StateFamily::kGhz:
            return "ghz";
        case StateFamily::kCluster4:
            return "cluster4";
        case StateFamily::kClusterStabilizer:
            return "cluster";
        case StateFamily::kDicke:
            return "dicke";
        case StateFamily::kW:
            return "w";
        case StateFamily::kSinglet4:
            return "singlet";
        case StateFamily::kPsi:
            return "psi";
    }
    return "unknown";
}

StateVector make_state(StateFamily family, std::size_t n, const StateParams &params) {
    if (n < 2 || n > kMaxStateQubits) {
        throw ArgumentError("make_state: qubit count must be in 2.." + std::to_string(kMaxStateQubits));
    }
    auto require_four = [&](const char *name) {
        if (n != 4) {
            throw ArgumentError(std::string("make_state: ") + name + " is defined for 4 qubits only");
        }
    };
    const std::size_t d = dim(n);
    switch (family) {
        case StateFamily::kGhz:
            return StateVector::normalized(n, basis_vector(n, {{0, 1.0}, {d - 1, 1.0}}));
        case StateFamily::kCluster4:
            require_four("cluster4");
            return StateVector::normalized(n, basis_vector(n, {{0b0000, 1.0}, {0b0011, 1.0}, {0b1100, -1.0}, {0b1111, 1.0}}));
        case StateFamily::kClusterStabilizer: {
            if (n % 2 != 0) {
                throw ArgumentError("make_state: cluster requires an even qubit count");
            }
            Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
            for (std::size_t b = 0; b < d; ++b) {
                v[static_cast<Eigen::Index>(b)] = parity_sign(b & (b >> 1));
            }
            return StateVector::normalized(n, std::move(v));
        }
        case StateFamily::kDicke:
        case StateFamily::kW: {
            int k = family == StateFamily::kW ? 1 : params.excitations.value_or(static_cast<int>(n / 2));
            if (k < 0 || static_cast<std::size_t>(k) > n) {
                throw ArgumentError("make_state: excitations must be in 0..n");
            }
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
            for (std::size_t b = 0; b < d; ++b) {
                if (std::popcount(b) == k) {
                    v[static_cast<Eigen::Index>(b)] = 1.0;
                }
            }
            return StateVector::normalized(n, std::move(v));
        }
        case StateFamily::kSinglet4:
            require_four("singlet");
            return StateVector::normalized(n, basis_vector(n, {{0b0011, 1.0},
                                                               {0b1100, 1.0},
                                                               {0b0110, -0.5},
                                                               {0b1001, -0.5},
                                                               {0b0101, -0.5},
                                                               {0b1010, -0.5}}));
        case StateFamily::kPsi: {
            require_four("psi");
            double c = std::cos(2 * params.theta), s = std::sin(2 * params.theta);
            Complex e = std::polar(1.0, params.phi);
            return StateVector::normalized(n, basis_vector(n, {{0b0000, c}, {0b0011, s}, {0b1100, e * s}, {0b1111, -e * c}}));
        }
    }
    throw ArgumentError("make_state: unknown family");
}

double correlation(const StateVector &psi, const PauliString &j) {
    const std::size_t n = psi.num_qubits();
    if (j.num_qubits() != n) {
        throw DimensionError("correlation: operator " + j.str() + " does not match state size");
    }
    const std::uint64_t x = detail::site_to_basis_mask(j.x_mask(), n);
    const std::uint64_t z = detail::site_to_basis_mask(j.z_mask(), n);
    const auto &a = psi.amplitudes();
    Complex sum = 0;
    for (std::uint64_t b = 0; b < dim(n); ++b) {
        Complex term = std::conj(a[static_cast<Eigen::Index>(b ^ x)]) * a[static_cast<Eigen::Index>(b)];
        sum += (std::popcount(b & z) & 1) ? -term : term;
    }
    return std::clamp((i_power(j.y_count()) * sum).real(), -1.0, 1.0);
}

double correlation(const DensityMatrix &rho, const PauliString &j) {
    const std::size_t n = rho.num_qubits();
    if (j.num_qubits() != n) {
        throw DimensionError("correlation: operator " + j.str() + " does not match state size");
    }
    const std::uint64_t x = detail::site_to_basis_mask(j.x_mask(), n);
    const std::uint64_t z = detail::site_to_basis_mask(j.z_mask(), n);
    const auto &m = rho.matrix();
    Complex sum = 0;
    for (std::uint64_t b = 0; b < dim(n); ++b) {
        Complex term = m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ x));
        sum += (std::popcount(b & z) & 1) ? -term : term;
    }
    return std::clamp((i_power(j.y_count()) * sum).real(), -1.0, 1.0);
}

CorrelationSet nonvanishing_correlations(const StateVector &psi, double tol) {
    if (!(tol > 0)) {
        throw ArgumentError("nonvanishing_correlations: tolerance must be positive");
    }
    const std::size_t n = psi.num_qubits();
    require_qubits(n, kMaxDenseQubits, "nonvanishing_correlations");
    const std::size_t d = dim(n);
    const auto &a = psi.amplitudes();
    CorrelationSet out(n);
    std::vector<Complex> w(d);
    for (std::uint64_t x = 0; x < d; ++x) {
        for (std::uint64_t b = 0; b < d; ++b) {
            w[b] = std::conj(a[static_cast<Eigen::Index>(b ^ x)]) * a[static_cast<Eigen::Index>(b)];
        }
        walsh_hadamard(w);
        for (std::uint64_t z = 0; z < d; ++z) {
            double t = (i_power(static_cast<std::size_t>(std::popcount(x & z))) * w[z]).real();
            if (std::abs(t) > tol) {
                auto p = PauliString::from_masks(n, detail::site_to_basis_mask(x, n), detail::site_to_basis_mask(z, n));
                out.set(p, p.is_identity() ? 1.0 : std::clamp(t, -1.0, 1.0));
            }
        }
    }
    out.metadata["tolerance"] = std::to_string(tol);
    return out;
}

CorrelationSet correlations_for(const StateVector &psi, const std::vector<PauliString> &ops) {
    CorrelationSet out(psi.num_qubits());
    for (const auto &p : ops) {
        out.set(p, p.is_identity() ? 1.0 : correlation(psi, p));
    }
    return out;
}

CorrelationSet correlations_for(const DensityMatrix &rho, const std::vector<PauliString> &ops) {
    CorrelationSet out(rho.num_qubits());
    for (const auto &p : ops) {
        out.set(p, p.is_identity() ? 1.0 : correlation(rho, p));
    }
    return out;
}

DensityMatrix add_white_noise(const StateVector &psi, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError("add_white_noise: p must lie in [0, 1]");
    }
    require_qubits(psi.num_qubits(), kMaxDenseQubits, "add_white_noise");
    auto d = static_cast<Eigen::Index>(dim(psi.num_qubits()));
    Eigen::MatrixXcd m = p * (psi.amplitudes() * psi.amplitudes().adjoint());
    m.diagonal().array() += (1.0 - p) / static_cast<double>(d);
    return DensityMatrix(DensityMatrix::Unchecked{}, psi.num_qubits(), std::move(m));
}

double fidelity(const DensityMatrix &rho, const StateVector &psi) {
    if (rho.num_qubits() != psi.num_qubits()) {
        throw DimensionError("fidelity: state sizes differ");
    }
    Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
    return std::clamp(f.real(), 0.0, 1.0);
}

Complex overlap(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("overlap: state sizes differ");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double noise_for_fidelity(double target, std::size_t n) {
    const double floor = 1.0 / static_cast<double>(dim(n));
    if (!(target >= floor && target <= 1.0)) {
        throw ArgumentError("noise_for_fidelity: target fidelity must lie in [1/2^n, 1]");
    }
    return (target - floor) / (1.0 - floor);
}

std::vector<double> schmidt_coefficients(const StateVector &psi, const Bipartition &cut) {
    const std::size_t n = psi.num_qubits();
    if (cut.num_qubits() != n) {
        throw DimensionError("schmidt_coefficients: cut size differs from state size");
    }
    const auto sa = cut.sites_a();
    const auto sb = cut.sites_b();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim(sa.size())),
                                                static_cast<Eigen::Index>(dim(sb.size())));
    auto gather = [n](std::uint64_t b, const std::vector<std::size_t> &sites) {
        std::uint64_t out = 0;
        for (std::size_t site : sites) {
            out = (out << 1) | ((b >> (n - 1 - site)) & 1);
        }
        return static_cast<Eigen::Index>(out);
    };
    for (std::uint64_t b = 0; b < dim(n); ++b) {
        m(gather(b, sa), gather(b, sb)) = psi.amplitudes()[static_cast<Eigen::Index>(b)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> out(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

DensityMatrix density_from_correlations(const CorrelationSet &corrs) {
    const std::size_t n = corrs.num_qubits();
    require_qubits(n, kMaxDenseQubits, "density_from_correlations");
    auto id = corrs.find(PauliString(n));
    if (!id || id->value != 1.0) {
        throw ArgumentError("density_from_correlations: identity entry must be present and equal to 1");
    }
    const std::size_t d = dim(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (const auto &[p, c] : corrs.entries()) {
        const std::uint64_t x = detail::site_to_basis_mask(p.x_mask(), n);
        const std::uint64_t z = detail::site_to_basis_mask(p.z_mask(), n);
        const Complex phase = i_power(p.y_count()) * c.value;
        for (std::uint64_t b = 0; b < d; ++b) {
            m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += parity_sign(b & z) * phase;
        }
    }
    m /= static_cast<double>(d);
    return DensityMatrix(DensityMatrix::Unchecked{}, n, std::move(m));
}

void CountsRecord::validate() const {
    const std::size_t n = setting.num_qubits();
    if (n == 0) {
        throw DataError("counts record has no setting");
    }
    if (shots == 0) {
        throw DataError("counts record for setting " + setting.str() + " has zero shots");
    }
    std::uint64_t total = 0;
    for (const auto &[outcome, count] : counts) {
        if (outcome.size() != n || outcome.find_first_not_of("01") != std::string::npos) {
            throw DataError("counts record for setting " + setting.str() + ": bad outcome '" + outcome + "'");
        }
        total += count;
    }
    if (total != shots) {
        throw DataError("counts record for setting " + setting.str() + ": counts sum to " + std::to_string(total) +
                        ", expected " + std::to_string(shots));
    }
}

std::vector<double> outcome_probabilities(const DensityMatrix &rho, const MeasurementSetting &setting) {
    const std::size_t n = rho.num_qubits();
    if (setting.num_qubits() != n) {
        throw DimensionError("outcome_probabilities: setting size differs from state size");
    }
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0, 1);
    Eigen::MatrixXcd m = rho.matrix();
    const auto d = static_cast<Eigen::Index>(dim(n));
    for (std::size_t site = 0; site < n; ++site) {
        Eigen::Matrix2cd u;
        switch (setting.local(site)) {
            case 1:
                u << r, r, r, -r;
                break;
            case 2:
                u << r, -i * r, r, i * r;
                break;
            default:
                continue;
        }
        const Eigen::Index bit = Eigen::Index{1} << (n - 1 - site);
        // m <- u m u^dagger on this qubit: rows first, then columns.
        for (Eigen::Index b0 = 0; b0 < d; ++b0) {
            if (b0 & bit) {
                continue;
            }
            const Eigen::Index b1 = b0 | bit;
            Eigen::RowVectorXcd r0 = m.row(b0), r1 = m.row(b1);
            m.row(b0) = u(0, 0) * r0 + u(0, 1) * r1;
            m.row(b1) = u(1, 0) * r0 + u(1, 1) * r1;
        }
        for (Eigen::Index b0 = 0; b0 < d; ++b0) {
            if (b0 & bit) {
                continue;
            }
            const Eigen::Index b1 = b0 | bit;
            Eigen::VectorXcd c0 = m.col(b0), c1 = m.col(b1);
            m.col(b0) = std::conj(u(0, 0)) * c0 + std::conj(u(0, 1)) * c1;
            m.col(b1) = std::conj(u(1, 0)) * c0 + std::conj(u(1, 1)) * c1;
        }
    }
    std::vector<double> probs(static_cast<std::size_t>(d));
    for (Eigen::Index b = 0; b < d; ++b) {
        probs[static_cast<std::size_t>(b)] = std::max(0.0, m(b, b).real());
    }
    return probs;
}

CountsRecord simulate_counts(const DensityMatrix &rho, const MeasurementSetting &setting, std::int64_t shots,
                             std::uint64_t seed) {
    if (shots < 1) {
        throw ArgumentError("simulate_counts: shots must be positive");
    }
    const std::size_t n = rho.num_qubits();
    const auto probs = outcome_probabilities(rho, setting);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> dist(probs.begin(), probs.end());
    std::vector<std::uint64_t> tally(probs.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        ++tally[dist(rng)];
    }
    CountsRecord rec;
    rec.setting = setting;
    rec.shots = static_cast<std::uint64_t>(shots);
    for (std::size_t b = 0; b < tally.size(); ++b) {
        if (tally[b] == 0) {
            continue;
        }
        std::string outcome(n, '0');
        for (std::size_t site = 0; site < n; ++site) {
            if ((b >> (n - 1 - site)) & 1) {
                outcome[site] = '1';
            }
        }
        rec.counts[outcome] = tally[b];
    }
    return rec;
}

}  // namespace minwit

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


// Dense-matrix reference implementations used to cross-check the library.

#ifndef MINWIT_TESTS_REFERENCE_H
#define MINWIT_TESTS_REFERENCE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minwit/pauli.h"
#include "minwit/state.h"

namespace minwit::reference {

using Cd = std::complex<double>;

inline Eigen::Matrix2cd single_pauli(char digit) {
    Eigen::Matrix2cd m;
    switch (digit) {
        case '0':
            m << 1, 0, 0, 1;
            break;
        case '1':
            m << 0, 1, 1, 0;
            break;
        case '2':
            m << 0, Cd(0, -1), Cd(0, 1), 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

/// Kronecker product with the first digit as the most significant factor.
inline Eigen::MatrixXcd dense(const std::string &digits) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (char c : digits) {
        Eigen::Matrix2cd s = single_pauli(c);
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            for (Eigen::Index j = 0; j < out.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = out(i, j) * s;
            }
        }
        out = std::move(next);
    }
    return out;
}

inline Eigen::MatrixXcd dense(const PauliString &p) {
    return dense(p.str());
}

inline double expectation(const Eigen::VectorXcd &psi, const std::string &digits) {
    return (psi.adjoint() * dense(digits) * psi)(0, 0).real();
}

inline double expectation(const Eigen::MatrixXcd &rho, const std::string &digits) {
    return (rho * dense(digits)).trace().real();
}

inline Eigen::VectorXcd random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = Cd(g(rng), g(rng));
    }
    return v.normalized();
}

inline std::string random_digits(std::size_t n, std::mt19937_64 &rng, int lo = 0) {
    std::uniform_int_distribution<int> d(lo, 3);
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(static_cast<char>('0' + d(rng)));
    }
    return s;
}

/// All 4^n digit strings in lexicographic order.
inline std::vector<std::string> all_digit_strings(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto &s : out) {
            for (char c = '0'; c <= '3'; ++c) {
                next.push_back(s + c);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace minwit::reference

#endif

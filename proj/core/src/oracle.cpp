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

#include "minwit/oracle.h"

#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "minwit/errors.h"
#include "minwit/state.h"

namespace minwit {

namespace {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;

constexpr double kTolerance = 1e-9;
constexpr std::size_t kChunks = 16;

// Precomputed basis-order masks for fast expectation values.
struct CompiledOp {
    std::uint64_t x;
    std::uint64_t z;
    Complex phase;
};

CompiledOp compile(const PauliString &p) {
    const std::size_t n = p.num_qubits();
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {detail::site_to_basis_mask(p.x_mask(), n), detail::site_to_basis_mask(p.z_mask(), n),
            powers[p.y_count() & 3]};
}

double expect(const Vec &a, const CompiledOp &op) {
    Complex sum = 0;
    const auto d = static_cast<std::uint64_t>(a.size());
    for (std::uint64_t b = 0; b < d; ++b) {
        Complex term = std::conj(a[static_cast<Eigen::Index>(b ^ op.x)]) * a[static_cast<Eigen::Index>(b)];
        sum += (std::popcount(b & op.z) & 1) ? -term : term;
    }
    return (op.phase * sum).real();
}

std::vector<double> expect_all(const Vec &a, const std::vector<CompiledOp> &ops) {
    std::vector<double> out(ops.size());
    for (std::size_t j = 0; j < ops.size(); ++j) {
        out[j] = expect(a, ops[j]);
    }
    return out;
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::size_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), 0x5eedu};
    return std::mt19937_64(seq);
}

Vec haar(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(static_cast<Eigen::Index>(dim));
    for (auto &x : v) {
        x = Complex(g(rng), g(rng));
    }
    return v / v.norm();
}

std::vector<double> dirichlet(std::size_t k, std::mt19937_64 &rng) {
    std::exponential_distribution<double> e;
    std::vector<double> w(k);
    double s = 0;
    for (auto &x : w) {
        x = e(rng);
        s += x;
    }
    for (auto &x : w) {
        x /= s;
    }
    return w;
}

// Tensor product of states on disjoint site blocks.
class ProductLayout {
   public:
    ProductLayout(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : n_(n), blocks_(std::move(blocks)) {
        const std::size_t d = std::size_t{1} << n;
        index_.assign(blocks_.size(), std::vector<Eigen::Index>(d));
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            for (std::uint64_t b = 0; b < d; ++b) {
                std::uint64_t local = 0;
                for (std::size_t site : blocks_[k]) {
                    local = (local << 1) | ((b >> (n - 1 - site)) & 1);
                }
                index_[k][b] = static_cast<Eigen::Index>(local);
            }
        }
    }

    static ProductLayout for_cut(const Bipartition &cut) {
        return ProductLayout(cut.num_qubits(), {cut.sites_a(), cut.sites_b()});
    }

    static ProductLayout fully_separable(std::size_t n) {
        std::vector<std::vector<std::size_t>> blocks;
        for (std::size_t i = 0; i < n; ++i) {
            blocks.push_back({i});
        }
        return ProductLayout(n, std::move(blocks));
    }

    std::size_t blocks() const {
        return blocks_.size();
    }
    std::size_t block_dim(std::size_t k) const {
        return std::size_t{1} << blocks_[k].size();
    }
    std::size_t parameter_count() const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < blocks(); ++k) {
            c += 2 * block_dim(k);
        }
        return c;
    }

    Vec combine(const std::vector<Vec> &parts) const {
        const std::size_t d = std::size_t{1} << n_;
        Vec out(static_cast<Eigen::Index>(d));
        for (std::uint64_t b = 0; b < d; ++b) {
            Complex amp = 1;
            for (std::size_t k = 0; k < parts.size(); ++k) {
                amp *= parts[k][index_[k][b]];
            }
            out[static_cast<Eigen::Index>(b)] = amp;
        }
        return out;
    }

    Vec sample(std::mt19937_64 &rng) const {
        std::vector<Vec> parts;
        for (std::size_t k = 0; k < blocks(); ++k) {
            parts.push_back(haar(block_dim(k), rng));
        }
        return combine(parts);
    }

    // Unnormalised real/imag parameters to a normalised product state.
    Vec from_parameters(const double *x) const {
        std::vector<Vec> parts;
        std::size_t at = 0;
        for (std::size_t k = 0; k < blocks(); ++k) {
            Vec v(static_cast<Eigen::Index>(block_dim(k)));
            for (auto &c : v) {
                c = Complex(x[at], x[at + 1]);
                at += 2;
            }
            double norm = v.norm();
            parts.push_back(norm > 0 ? Vec(v / norm) : Vec(Vec::Unit(v.size(), 0)));
        }
        return combine(parts);
    }

    std::string describe() const {
        std::string s;
        for (std::size_t k = 0; k < blocks(); ++k) {
            if (k) {
                s += "|";
            }
            for (auto site : blocks_[k]) {
                s += static_cast<char>('A' + site);
            }
        }
        return s;
    }

   private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::vector<Eigen::Index>> index_;
};

// Runs `work(chunk, rng)` over a fixed chunk partition so results do not depend
// on the number of threads.
void parallel_chunks(std::size_t threads, std::uint64_t seed,
                     const std::function<void(std::size_t, std::mt19937_64 &)> &work) {
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, kChunks);
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr error;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t chunk = t; chunk < kChunks; chunk += threads) {
                    auto rng = chunk_rng(seed, chunk);
                    work(chunk, rng);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                error = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::size_t chunk_share(std::size_t total, std::size_t chunk) {
    return total / kChunks + (chunk < total % kChunks ? 1 : 0);
}

struct Best {
    double value = -1;
    std::string where;

    void offer(double v, const std::string &w) {
        if (v > value) {
            value = v;
            where = w;
        }
    }
    void merge(const Best &other) {
        if (other.value > value || (other.value == value && other.where < where)) {
            value = other.value;
            where = other.where;
        }
    }
};

// Derivative-free local maximisation of f over product-state parameters.
double refine(const ProductLayout &layout, const std::function<double(const Vec &)> &f, std::mt19937_64 &rng) {
    const std::size_t dim = layout.parameter_count();
    struct Context {
        const ProductLayout *layout;
        const std::function<double(const Vec &)> *f;
    } ctx{&layout, &f};
    gsl_multimin_function fn;
    fn.n = dim;
    fn.params = &ctx;
    fn.f = [](const gsl_vector *x, void *params) {
        auto *c = static_cast<Context *>(params);
        return -(*c->f)(c->layout->from_parameters(x->data));
    };
    gsl_vector *start = gsl_vector_alloc(dim);
    gsl_vector *step = gsl_vector_alloc(dim);
    std::normal_distribution<double> g;
    for (std::size_t i = 0; i < dim; ++i) {
        gsl_vector_set(start, i, g(rng));
    }
    gsl_vector_set_all(step, 0.5);
    gsl_multimin_fminimizer *m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
    gsl_multimin_fminimizer_set(m, &fn, start, step);
    for (int iter = 0; iter < 4000; ++iter) {
        if (gsl_multimin_fminimizer_iterate(m) != 0) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-9) == GSL_SUCCESS) {
            break;
        }
    }
    double best = -gsl_multimin_fminimizer_minimum(m);
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(start);
    gsl_vector_free(step);
    return best;
}

void finish(OracleReport &r) {
    r.margin = r.bound - r.max_observed;
    r.pass = r.max_observed <= r.bound + kTolerance;
}

}  // namespace

OracleReport check_anticommuting_bound(const std::vector<PauliString> &ops, const OracleOptions &options) {
    if (ops.empty()) {
        throw ArgumentError("check_anticommuting_bound: no operators");
    }
    const std::size_t n = ops.front().num_qubits();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].num_qubits() != n) {
            throw DimensionError("check_anticommuting_bound: operators differ in length");
        }
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (commutes(ops[i], ops[j])) {
                throw ArgumentError("check_anticommuting_bound: " + ops[i].str() + " and " + ops[j].str() +
                                    " commute");
            }
        }
    }
    if (n > 10) {
        throw ArgumentError("check_anticommuting_bound: at most 10 qubits");
    }
    std::vector<CompiledOp> compiled;
    for (const auto &p : ops) {
        compiled.push_back(compile(p));
    }
    const std::size_t d = std::size_t{1} << n;
    std::vector<Best> bests(kChunks);
    parallel_chunks(options.threads, options.seed, [&](std::size_t chunk, std::mt19937_64 &rng) {
        std::uniform_int_distribution<std::size_t> comps(2, 8);
        const std::size_t share = chunk_share(options.trials, chunk);
        for (std::size_t t = 0; t < share; ++t) {
            if (t % 2 == 0) {
                auto tv = expect_all(haar(d, rng), compiled);
                double s = 0;
                for (double x : tv) s += x * x;
                bests[chunk].offer(s, "pure");
            } else {
                const std::size_t k = comps(rng);
                auto w = dirichlet(k, rng);
                std::vector<double> mix(ops.size(), 0.0);
                for (std::size_t c = 0; c < k; ++c) {
                    auto tv = expect_all(haar(d, rng), compiled);
                    for (std::size_t j = 0; j < ops.size(); ++j) mix[j] += w[c] * tv[j];
                }
                double s = 0;
                for (double x : mix) s += x * x;
                bests[chunk].offer(s, "mixture of " + std::to_string(k));
            }
        }
    });
    Best best;
    for (const auto &b : bests) best.merge(b);
    OracleReport r;
    r.suite = "anticommuting_bound";
    r.trials = options.trials;
    r.bound = 1.0;
    r.max_observed = std::max(best.value, 0.0);
    r.worst_case = best.where;
    r.details["maximally_mixed"] = 0.0;
    finish(r);
    return r;
}

OracleReport check_biseparable_bound(const PauliString &p, const PauliString &q, const Bipartition &cut,
                                     const OracleOptions &options) {
    if (p.num_qubits() != q.num_qubits() || p.num_qubits() != cut.num_qubits()) {
        throw DimensionError("check_biseparable_bound: sizes differ");
    }
    if (!cut_anticommutes(p, q, cut)) {
        throw ArgumentError("check_biseparable_bound: " + p.str() + " and " + q.str() + " do not " + cut.str() +
                            "-anticommute");
    }
    const std::size_t n = p.num_qubits();
    if (n > 10) {
        throw ArgumentError("check_biseparable_bound: at most 10 qubits");
    }
    const auto layout = ProductLayout::for_cut(cut);
    const std::vector<CompiledOp> compiled = {compile(p), compile(q)};
    const auto sa = cut.sites_a(), sb = cut.sites_b();
    const std::vector<CompiledOp> local = {compile(restrict(p, sa)), compile(restrict(p, sb)),
                                           compile(restrict(q, sa)), compile(restrict(q, sb))};
    auto score = [&](const Vec &psi) {
        double tp = expect(psi, compiled[0]), tq = expect(psi, compiled[1]);
        return tp * tp + tq * tq;
    };
    std::vector<Best> bests(kChunks);
    std::vector<double> factor_dev(kChunks, 0.0), refined(kChunks, -1.0);
    parallel_chunks(options.threads, options.seed, [&](std::size_t chunk, std::mt19937_64 &rng) {
        std::uniform_int_distribution<std::size_t> comps(2, 8);
        const std::size_t share = chunk_share(options.trials, chunk);
        const std::size_t da = std::size_t{1} << sa.size(), db = std::size_t{1} << sb.size();
        for (std::size_t t = 0; t < share; ++t) {
            if (t % 2 == 0) {
                Vec a = haar(da, rng), b = haar(db, rng);
                Vec psi = layout.combine({a, b});
                double tp = expect(psi, compiled[0]), tq = expect(psi, compiled[1]);
                double fp = expect(a, local[0]) * expect(b, local[1]);
                double fq = expect(a, local[2]) * expect(b, local[3]);
                factor_dev[chunk] = std::max({factor_dev[chunk], std::abs(tp - fp), std::abs(tq - fq)});
                bests[chunk].offer(tp * tp + tq * tq, "product " + cut.str());
            } else {
                const std::size_t k = comps(rng);
                auto w = dirichlet(k, rng);
                double mp = 0, mq = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    Vec psi = layout.sample(rng);
                    mp += w[c] * expect(psi, compiled[0]);
                    mq += w[c] * expect(psi, compiled[1]);
                }
                bests[chunk].offer(mp * mp + mq * mq, "mixture of " + std::to_string(k) + " " + cut.str());
            }
        }
        for (std::size_t rs = chunk; rs < options.restarts; rs += kChunks) {
            refined[chunk] = std::max(refined[chunk], refine(layout, score, rng));
        }
    });
    Best best;
    for (const auto &b : bests) best.merge(b);
    double opt = *std::max_element(refined.begin(), refined.end());
    double dev = *std::max_element(factor_dev.begin(), factor_dev.end());
    if (opt > best.value) {
        best.value = opt;
        best.where = "optimizer " + cut.str();
    }
    OracleReport r;
    r.suite = "biseparable_bound";
    r.trials = options.trials;
    r.bound = 1.0;
    r.max_observed = best.value;
    r.worst_case = p.str() + "," + q.str() + " " + best.where;
    r.details["optimizer_best"] = opt;
    r.details["factorization_deviation"] = dev;
    finish(r);
    r.pass = r.pass && dev < 1e-10;
    return r;
}

OracleReport check_witness_threshold(const WitnessSpec &witness, const OracleOptions &options) {
    const std::size_t n = witness.num_qubits;
    if (n < 2 || n > 8) {
        throw ArgumentError("check_witness_threshold: supports 2..8 qubits");
    }
    std::vector<CompiledOp> compiled;
    std::vector<double> weights;
    for (std::size_t j = 0; j < witness.operators.size(); ++j) {
        compiled.push_back(compile(witness.operators[j]));
        weights.push_back(to_double(witness.weights[j]));
    }
    const double g0 = to_double(witness.g0);
    auto value_of = [&](const std::vector<double> &t) {
        double s = 0;
        for (std::size_t j = 0; j < t.size(); ++j) s += weights[j] * t[j] * t[j];
        return s / g0;
    };
    auto score = [&](const Vec &psi) { return value_of(expect_all(psi, compiled)); };

    std::vector<ProductLayout> layouts;
    if (witness.bound_kind == BoundKind::kFullySeparable) {
        layouts.push_back(ProductLayout::fully_separable(n));
    } else {
        for (const auto &cut : enumerate_bipartitions(n)) {
            layouts.push_back(ProductLayout::for_cut(cut));
        }
    }
    const std::size_t L = layouts.size();
    // One slot per (chunk, layout) plus one per chunk for cross-cut mixtures.
    std::vector<Best> product(kChunks * L), mixture(kChunks);
    std::vector<double> refined(kChunks * L, -1.0);
    parallel_chunks(options.threads, options.seed, [&](std::size_t chunk, std::mt19937_64 &rng) {
        const std::size_t share = chunk_share(options.trials, chunk);
        for (std::size_t l = 0; l < L; ++l) {
            for (std::size_t t = 0; t < share; ++t) {
                product[chunk * L + l].offer(score(layouts[l].sample(rng)), "product " + layouts[l].describe());
            }
            for (std::size_t rs = chunk; rs < options.restarts; rs += kChunks) {
                refined[chunk * L + l] = std::max(refined[chunk * L + l], refine(layouts[l], score, rng));
            }
        }
        std::uniform_int_distribution<std::size_t> comps(2, 8), pick(0, L - 1);
        for (std::size_t t = 0; t < share; ++t) {
            const std::size_t k = comps(rng);
            auto w = dirichlet(k, rng);
            std::vector<double> mix(compiled.size(), 0.0);
            for (std::size_t c = 0; c < k; ++c) {
                auto tv = expect_all(layouts[pick(rng)].sample(rng), compiled);
                for (std::size_t j = 0; j < mix.size(); ++j) mix[j] += w[c] * tv[j];
            }
            mixture[chunk].offer(value_of(mix), "mixture of " + std::to_string(k) + " across cuts");
        }
    });
    OracleReport r;
    r.suite = "witness_threshold";
    r.trials = options.trials;
    r.bound = to_double(witness.threshold());
    Best overall;
    double optimizer_best = -1;
    for (std::size_t l = 0; l < L; ++l) {
        Best per;
        double opt = -1;
        for (std::size_t c = 0; c < kChunks; ++c) {
            per.merge(product[c * L + l]);
            opt = std::max(opt, refined[c * L + l]);
        }
        r.details["max_" + layouts[l].describe()] = std::max(per.value, opt);
        r.details["optimizer_" + layouts[l].describe()] = opt;
        optimizer_best = std::max(optimizer_best, opt);
        overall.merge(per);
        if (opt > overall.value) {
            overall.value = opt;
            overall.where = "optimizer " + layouts[l].describe();
        }
    }
    Best mixed;
    for (const auto &b : mixture) mixed.merge(b);
    r.details["max_mixture"] = mixed.value;
    r.details["optimizer_best"] = optimizer_best;
    overall.merge(mixed);
    r.max_observed = overall.value;
    r.worst_case = overall.where;
    finish(r);
    return r;
}

OracleReport check_commuting_saturation(const std::vector<PauliString> &ops, const OracleOptions &options) {
    if (ops.empty()) {
        throw ArgumentError("check_commuting_saturation: no operators");
    }
    const std::size_t n = ops.front().num_qubits();
    if (n > 6) {
        throw ArgumentError("check_commuting_saturation: at most 6 qubits");
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].num_qubits() != n) {
            throw DimensionError("check_commuting_saturation: operators differ in length");
        }
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!commutes(ops[i], ops[j])) {
                throw ArgumentError("check_commuting_saturation: " + ops[i].str() + " and " + ops[j].str() +
                                    " anticommute");
            }
        }
    }
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    std::vector<CompiledOp> compiled;
    for (const auto &p : ops) {
        compiled.push_back(compile(p));
    }
    // A generic combination of commuting operators has joint eigenvectors only.
    auto rng = chunk_rng(options.seed, 0);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &op : compiled) {
        const double c = g(rng);
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(d); ++b) {
            Complex entry = op.phase * ((std::popcount(b & op.z) & 1) ? -1.0 : 1.0);
            h(static_cast<Eigen::Index>(b ^ op.x), static_cast<Eigen::Index>(b)) += c * entry;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    Vec top = solver.eigenvectors().col(d - 1);
    double saturated = 0;
    for (double t : expect_all(top, compiled)) saturated += t * t;

    std::vector<Best> bests(kChunks);
    parallel_chunks(options.threads, options.seed, [&](std::size_t chunk, std::mt19937_64 &r) {
        const std::size_t share = chunk_share(options.trials, chunk);
        for (std::size_t t = 0; t < share; ++t) {
            double s = 0;
            for (double x : expect_all(haar(static_cast<std::size_t>(d), r), compiled)) s += x * x;
            bests[chunk].offer(s, "random pure");
        }
    });
    Best best;
    for (const auto &b : bests) best.merge(b);

    OracleReport rep;
    rep.suite = "commuting_saturation";
    rep.trials = options.trials;
    rep.bound = static_cast<double>(ops.size());
    rep.max_observed = std::max(saturated, best.value);
    rep.worst_case = "joint eigenstate";
    rep.details["joint_eigenstate"] = saturated;
    rep.details["random_max"] = best.value;
    finish(rep);
    rep.pass = rep.pass && std::abs(saturated - rep.bound) < kTolerance;
    return rep;
}

}  // namespace minwit

// Copyright 2026 The nonadapt Authors
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

#include "nonadapt/random.h"

#include <cmath>
#include <numbers>
#include <set>

#include "nonadapt/errors.h"

namespace nonadapt {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t derive_seed(uint64_t seed, std::string_view stream) {
    return splitmix64(splitmix64(seed) ^ fnv1a(stream));
}

std::mt19937_64 make_stream(uint64_t seed, std::string_view stream) {
    return std::mt19937_64(derive_seed(seed, stream));
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t uniform_below(std::mt19937_64 &rng, uint64_t bound) {
    require(bound > 0, "uniform_below needs a positive bound");
    // Rejection sampling keeps the result exactly uniform.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

double standard_normal(std::mt19937_64 &rng) {
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

QueryState random_state(size_t n, size_t k, size_t ancilla_dim, size_t support, std::mt19937_64 &rng) {
    QueryState psi(n, k, ancilla_dim);
    double space = std::pow(static_cast<double>(n + 1), static_cast<double>(k)) * static_cast<double>(ancilla_dim);
    auto random_amp = [&]() { return Amplitude(standard_normal(rng), standard_normal(rng)); };
    if (support == 0 || static_cast<double>(support) >= space) {
        require(space <= 1e6, "random_state: full support too large");
        std::vector<uint32_t> digits(k, 0);
        while (true) {
            for (uint32_t a = 0; a < ancilla_dim; a++) {
                psi.add(IndexTuple(digits), random_amp(), a);
            }
            size_t m = k;
            while (m > 0) {
                if (++digits[m - 1] <= n) {
                    break;
                }
                digits[m - 1] = 0;
                m--;
            }
            if (m == 0) {
                break;
            }
        }
    } else {
        std::set<BasisLabel> chosen;
        while (chosen.size() < support) {
            std::vector<uint32_t> digits(k);
            for (auto &d : digits) {
                d = static_cast<uint32_t>(uniform_below(rng, n + 1));
            }
            auto a = static_cast<uint32_t>(uniform_below(rng, ancilla_dim));
            chosen.insert(BasisLabel{IndexTuple(std::move(digits)), a});
        }
        for (const auto &label : chosen) {
            psi.add(label.tuple, random_amp(), label.ancilla);
        }
    }
    psi.normalize();
    return psi;
}

Eigen::MatrixXcd random_unitary(size_t dim, std::mt19937_64 &rng) {
    auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd z(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            z(r, c) = std::complex<double>(standard_normal(rng), standard_normal(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < d; c++) {
        double mag = std::abs(r(c, c));
        if (mag > 0) {
            q.col(c) *= r(c, c) / mag;
        }
    }
    return q;
}

Measurement random_two_outcome_povm(const QueryState &space, const std::vector<BasisLabel> &basis, std::mt19937_64 &rng) {
    require(!basis.empty(), "random POVM needs a nonempty basis");
    auto d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd u = random_unitary(basis.size(), rng);
    Eigen::VectorXd lambda(d);
    for (Eigen::Index i = 0; i < d; i++) {
        lambda[i] = uniform01(rng);
    }
    Eigen::MatrixXcd m0 = u * lambda.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    m0 = (m0 + m0.adjoint()) / 2.0;
    Eigen::MatrixXcd m1 = Eigen::MatrixXcd::Identity(d, d) - m0;
    return Measurement::povm(space.n(), space.k(), space.ancilla_dim(), basis,
                             {PovmElement{"0", m0}, PovmElement{"1", m1}});
}

std::vector<BasisLabel> support_basis(const QueryState &psi) {
    std::vector<BasisLabel> out;
    out.reserve(psi.support_size());
    for (const auto &[label, amp] : psi.entries()) {
        out.push_back(label);
    }
    return out;
}

}  // namespace nonadapt

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

#include "nonadapt/algorithms.h"

#include <bit>
#include <cmath>

#include "nonadapt/errors.h"

namespace nonadapt {

namespace {

constexpr size_t kMaxDenseSubsets = 24;

uint64_t subset_mask(const IndexTuple &t) {
    uint64_t mask = 0;
    for (uint32_t i : t.odd_indices()) {
        mask |= uint64_t{1} << (i - 1);
    }
    return mask;
}

IndexTuple subset_tuple(uint64_t mask, size_t k) {
    std::vector<uint32_t> indices;
    indices.reserve(k);
    for (uint32_t j = 1; mask; j++, mask >>= 1) {
        if (mask & 1) {
            indices.push_back(j);
        }
    }
    indices.resize(k, 0);
    return IndexTuple(std::move(indices));
}

int parity_sign(uint64_t a, uint64_t b) {
    return std::popcount(a & b) % 2 ? -1 : 1;
}

void walsh_hadamard(std::vector<double> &v) {
    for (size_t h = 1; h < v.size(); h <<= 1) {
        for (size_t i = 0; i < v.size(); i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                double a = v[j];
                double b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

}  // namespace

std::string NonadaptiveAlgorithm::answer(const std::string &outcome) const {
    return postprocess ? postprocess(outcome) : outcome;
}

Measurement NonadaptiveAlgorithm::output_measurement() const {
    if (!postprocess) {
        return meas;
    }
    return meas.relabeled(postprocess);
}

NonadaptiveAlgorithm build_parity_algorithm(size_t n) {
    require(n >= 1, "parity needs n >= 1");
    size_t k = (n + 1) / 2;
    const double h = 1 / std::sqrt(2.0);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (size_t r = 0; r < k; r++) {
        auto a = static_cast<uint32_t>(2 * r + 1);
        auto b = static_cast<uint32_t>(2 * r + 2 <= n ? 2 * r + 2 : 0);
        pairs.emplace_back(a, b);
    }

    auto register_state = [&](size_t r, int sign) {
        QueryState s(n, 1);
        s.add({pairs[r].first}, h);
        s.add({pairs[r].second}, sign * h);
        return s;
    };

    QueryState psi = register_state(0, +1);
    for (size_t r = 1; r < k; r++) {
        psi = tensor_product(psi, register_state(r, +1));
    }

    std::vector<ProjectiveElement> elements;
    for (uint64_t pattern = 0; pattern < (uint64_t{1} << k); pattern++) {
        std::string label(k, '+');
        QueryState e = register_state(0, (pattern & 1) ? -1 : +1);
        label[0] = (pattern & 1) ? '-' : '+';
        for (size_t r = 1; r < k; r++) {
            bool minus = (pattern >> r) & 1;
            label[r] = minus ? '-' : '+';
            e = tensor_product(e, register_state(r, minus ? -1 : +1));
        }
        elements.push_back(ProjectiveElement{label, std::move(e)});
    }

    NonadaptiveAlgorithm alg{"parity", std::move(psi), Measurement::projective(std::move(elements)), {}};
    alg.postprocess = [](const std::string &outcome) {
        size_t minus = 0;
        for (char c : outcome) {
            minus += c == '-';
        }
        return std::string(minus % 2 ? "1" : "0");
    };
    return alg;
}

QueryState build_vandam_state(size_t n, size_t k) {
    require(k >= 1 && k <= n, "van Dam state needs 1 <= k <= n");
    require(n <= kMaxDenseSubsets, "van Dam state supports n <= 24");
    QueryState psi(n, k);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
        if (static_cast<size_t>(std::popcount(mask)) <= k) {
            psi.add(subset_tuple(mask, k), 1.0);
        }
    }
    psi.normalize();
    return psi;
}

double vandam_closed_form(size_t n, size_t k) {
    require(k <= n, "k must not exceed n");
    double binom = 1;
    double total = 0;
    for (size_t j = 0; j <= k; j++) {
        total += binom;
        binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
    }
    return total / std::ldexp(1.0, static_cast<int>(n));
}

double VanDamDistribution::probability_of(const OracleString &y) const {
    require(y.n() == n, "candidate length does not match n");
    return candidates[y.to_index()];
}

VanDamDistribution vandam_outcome_distribution(size_t n, size_t k, const OracleString &x, FourierPath path) {
    require(n >= 1 && k <= n, "van Dam needs n >= 1 and 0 <= k <= n");
    require(n <= kMaxDenseSubsets, "van Dam simulation supports n <= 24");
    require(x.n() == n, "oracle string length does not match n");
    size_t size = size_t{1} << n;
    double scale = std::ldexp(1.0, -static_cast<int>(n));  // 2^{-n}
    VanDamDistribution dist{n, k, std::vector<double>(size, 0.0), 0.0};
    uint64_t xmask = x.to_index();

    if (k == 0) {
        std::fill(dist.candidates.begin(), dist.candidates.end(), scale);
    } else if (path == FourierPath::kFast) {
        double support = 0;
        std::vector<double> amp(size, 0.0);
        for (uint64_t s = 0; s < size; s++) {
            if (static_cast<size_t>(std::popcount(s)) <= k) {
                amp[s] = parity_sign(s, xmask);
                support += 1;
            }
        }
        walsh_hadamard(amp);
        for (uint64_t y = 0; y < size; y++) {
            dist.candidates[y] = amp[y] * amp[y] * scale / support;
        }
    } else {
        QueryState psi = apply_oracle(build_vandam_state(n, k), x);
        std::vector<std::pair<uint64_t, double>> entries;
        entries.reserve(psi.support_size());
        for (const auto &[label, a] : psi.entries()) {
            entries.emplace_back(subset_mask(label.tuple), a.real());
        }
        for (uint64_t y = 0; y < size; y++) {
            double overlap = 0;
            for (const auto &[s, a] : entries) {
                overlap += parity_sign(s, y) * a;
            }
            dist.candidates[y] = overlap * overlap * scale;
        }
    }
    double total = 0;
    for (double p : dist.candidates) {
        total += p;
    }
    dist.fail = std::max(0.0, 1.0 - total);
    return dist;
}

NonadaptiveAlgorithm build_vandam_learner(size_t n, size_t k) {
    require(n >= 1 && n <= 6, "explicit van Dam learner supports n <= 6");
    QueryState psi = build_vandam_state(n, k);
    std::vector<BasisLabel> basis;
    for (const auto &[label, amp] : psi.entries()) {
        basis.push_back(label);
    }
    auto dim = static_cast<Eigen::Index>(basis.size());
    double norm = std::ldexp(1.0, -static_cast<int>(n));  // 2^{-n} = (2^{-n/2})^2
    std::vector<PovmElement> elements;
    Eigen::MatrixXcd rest = Eigen::MatrixXcd::Identity(dim, dim);
    for (uint64_t y = 0; y < (uint64_t{1} << n); y++) {
        Eigen::VectorXd v(dim);
        for (Eigen::Index r = 0; r < dim; r++) {
            v[r] = parity_sign(subset_mask(basis[static_cast<size_t>(r)].tuple), y);
        }
        Eigen::MatrixXcd e = (v * v.transpose() * norm).cast<std::complex<double>>();
        rest -= e;
        elements.push_back(PovmElement{OracleString::from_index(y, n).str(), std::move(e)});
    }
    elements.push_back(PovmElement{"fail", rest});
    Measurement meas = Measurement::povm(n, k, 1, std::move(basis), std::move(elements));
    return NonadaptiveAlgorithm{"vandam", std::move(psi), std::move(meas), {}};
}

OracleString bv_concept(size_t b, uint64_t s) {
    require(b >= 1 && b <= 4, "Bernstein-Vazirani instances support 1 <= b <= 4");
    require(s < (uint64_t{1} << b), "hidden string does not fit in b bits");
    size_t n = (size_t{1} << b) - 1;
    OracleString x(n);
    for (size_t i = 1; i <= n; i++) {
        x.set(i, std::popcount(s & i) % 2 == 1);
    }
    return x;
}

BvInstance build_bv_instance(size_t b) {
    require(b >= 1 && b <= 4, "Bernstein-Vazirani instances support 1 <= b <= 4");
    size_t count = size_t{1} << b;
    size_t n = count - 1;
    double amp = 1 / std::sqrt(static_cast<double>(count));

    std::vector<OracleString> concepts;
    QueryState psi(n, 1);
    std::vector<ProjectiveElement> elements;
    for (uint64_t s = 0; s < count; s++) {
        concepts.push_back(bv_concept(b, s));
        psi.add({static_cast<uint32_t>(s)}, amp);
        QueryState h(n, 1);
        for (uint64_t i = 0; i < count; i++) {
            h.add({static_cast<uint32_t>(i)}, parity_sign(s, i) * amp);
        }
        elements.push_back(ProjectiveElement{OracleString::from_index(s, b).str(), std::move(h)});
    }
    NonadaptiveAlgorithm learner{"bv", std::move(psi), Measurement::projective(std::move(elements)), {}};
    learner.postprocess = [b](const std::string &outcome) {
        return bv_concept(b, OracleString::from_string(outcome).to_index()).str();
    };
    return BvInstance{b, ConceptClass(n, std::move(concepts)), std::move(learner)};
}

Distribution run_learning(const NonadaptiveAlgorithm &alg, const OracleString &x) {
    require(alg.psi.n() == x.n(), "concept length does not match the learner's n");
    return measure(apply_oracle(alg.psi, x), alg.output_measurement());
}

SuccessRange learning_success(const NonadaptiveAlgorithm &alg, const ConceptClass &concepts) {
    SuccessRange range;
    Measurement out = alg.output_measurement();
    for (const auto &x : concepts.concepts()) {
        Distribution dist = measure(apply_oracle(alg.psi, x), out);
        auto it = dist.find(x.str());
        double p = it == dist.end() ? 0.0 : it->second;
        range.min = std::min(range.min, p);
        range.max = std::max(range.max, p);
    }
    return range;
}

}  // namespace nonadapt

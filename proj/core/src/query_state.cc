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

#include "nonadapt/query_state.h"

#include <algorithm>
#include <cmath>

#include "nonadapt/errors.h"

namespace nonadapt {

size_t IndexTuple::multiplicity(uint32_t j) const {
    return static_cast<size_t>(std::count(indices_.begin(), indices_.end(), j));
}

std::vector<uint32_t> IndexTuple::distinct_nonzero() const {
    std::vector<uint32_t> out;
    for (uint32_t i : indices_) {
        if (i != 0) {
            out.push_back(i);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint32_t> IndexTuple::odd_indices() const {
    std::vector<uint32_t> out;
    for (uint32_t i : distinct_nonzero()) {
        if (multiplicity(i) % 2 == 1) {
            out.push_back(i);
        }
    }
    return out;
}

void IndexTuple::check_range(size_t n) const {
    for (uint32_t i : indices_) {
        if (i > n) {
            throw ContractViolation("tuple " + str() + " has index outside [0, " + std::to_string(n) + "]");
        }
    }
}

std::string IndexTuple::str() const {
    std::string s = "(";
    for (size_t m = 0; m < indices_.size(); m++) {
        if (m) {
            s += ",";
        }
        s += std::to_string(indices_[m]);
    }
    return s + ")";
}

int oracle_phase(const OracleString &x, const IndexTuple &t) {
    t.check_range(x.n());
    unsigned parity = 0;
    for (uint32_t i : t) {
        parity ^= x[i];
    }
    return parity ? -1 : 1;
}

QueryState::QueryState(size_t n, size_t k, size_t ancilla_dim) : n_(n), k_(k), ancilla_dim_(ancilla_dim) {
    require(n >= 1, "query state needs n >= 1");
    require(k >= 1, "query state needs k >= 1");
    require(ancilla_dim >= 1, "ancilla dimension must be at least 1");
}

QueryState QueryState::basis(size_t n, const IndexTuple &t, uint32_t ancilla, size_t ancilla_dim) {
    QueryState psi(n, t.size(), ancilla_dim);
    psi.set(t, 1.0, ancilla);
    return psi;
}

void QueryState::check_label(const IndexTuple &t, uint32_t ancilla) const {
    require(t.size() == k_, "tuple " + t.str() + " does not have k = " + std::to_string(k_) + " entries");
    t.check_range(n_);
    require(ancilla < ancilla_dim_, "ancilla label outside [0, ancilla_dim)");
}

void QueryState::add(const IndexTuple &t, Amplitude value, uint32_t ancilla) {
    check_label(t, ancilla);
    entries_[BasisLabel{t, ancilla}] += value;
}

void QueryState::set(const IndexTuple &t, Amplitude value, uint32_t ancilla) {
    check_label(t, ancilla);
    if (value == Amplitude{}) {
        entries_.erase(BasisLabel{t, ancilla});
    } else {
        entries_[BasisLabel{t, ancilla}] = value;
    }
}

Amplitude QueryState::amplitude(const IndexTuple &t, uint32_t ancilla) const {
    auto it = entries_.find(BasisLabel{t, ancilla});
    return it == entries_.end() ? Amplitude{} : it->second;
}

double QueryState::squared_norm() const {
    double total = 0;
    for (const auto &[label, amp] : entries_) {
        total += std::norm(amp);
    }
    return total;
}

QueryState &QueryState::normalize() {
    std::erase_if(entries_, [](const auto &e) { return e.second == Amplitude{}; });
    double norm = std::sqrt(squared_norm());
    if (!(norm > 0)) {
        throw ValidationError("cannot normalize the zero state");
    }
    for (auto &[label, amp] : entries_) {
        amp /= norm;
    }
    return *this;
}

bool QueryState::is_normalized(double tol) const {
    return std::abs(squared_norm() - 1.0) <= tol;
}

bool QueryState::same_space(const QueryState &other) const {
    return n_ == other.n_ && k_ == other.k_ && ancilla_dim_ == other.ancilla_dim_;
}

void QueryState::scale(Amplitude factor) {
    for (auto &[label, amp] : entries_) {
        amp *= factor;
    }
}

QueryState apply_oracle(const QueryState &psi, const OracleString &x) {
    require(psi.n() == x.n(), "oracle string length does not match the state's n");
    QueryState out = psi;
    for (const auto &[label, amp] : psi.entries()) {
        if (oracle_phase(x, label.tuple) < 0) {
            out.set(label.tuple, -amp, label.ancilla);
        }
    }
    return out;
}

Amplitude inner_product(const QueryState &a, const QueryState &b) {
    require(a.same_space(b), "inner product of states from different spaces");
    const auto &small = a.support_size() <= b.support_size() ? a.entries() : b.entries();
    const auto &large = a.support_size() <= b.support_size() ? b.entries() : a.entries();
    bool a_is_small = &small == &a.entries();
    Amplitude total{};
    for (const auto &[label, amp] : small) {
        auto it = large.find(label);
        if (it == large.end()) {
            continue;
        }
        total += a_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return total;
}

QueryState tensor_product(const QueryState &a, const QueryState &b) {
    require(a.n() == b.n(), "tensor product of states with different n");
    QueryState out(a.n(), a.k() + b.k(), a.ancilla_dim() * b.ancilla_dim());
    for (const auto &[la, va] : a.entries()) {
        for (const auto &[lb, vb] : b.entries()) {
            std::vector<uint32_t> joined = la.tuple.indices();
            joined.insert(joined.end(), lb.tuple.begin(), lb.tuple.end());
            auto ancilla = static_cast<uint32_t>(la.ancilla * b.ancilla_dim() + lb.ancilla);
            out.add(IndexTuple(std::move(joined)), va * vb, ancilla);
        }
    }
    return out;
}

}  // namespace nonadapt

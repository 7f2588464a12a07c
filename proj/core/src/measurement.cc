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

#include "nonadapt/measurement.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "nonadapt/errors.h"

namespace nonadapt {

Measurement Measurement::projective(std::vector<ProjectiveElement> elements) {
    if (elements.empty()) {
        throw ValidationError("projective measurement has no elements");
    }
    Measurement m;
    m.kind_ = Kind::kProjective;
    const QueryState &first = elements.front().state;
    m.n_ = first.n();
    m.k_ = first.k();
    m.ancilla_dim_ = first.ancilla_dim();
    for (size_t i = 0; i < elements.size(); i++) {
        const QueryState &s = elements[i].state;
        if (!s.same_space(first)) {
            throw ValidationError("projective elements live in different spaces");
        }
        if (!s.is_normalized(kTolerance)) {
            throw ValidationError("projective element '" + elements[i].outcome + "' is not normalized");
        }
        for (size_t j = 0; j < i; j++) {
            if (std::abs(inner_product(elements[j].state, s)) > kTolerance) {
                throw ValidationError("projective elements '" + elements[j].outcome + "' and '" +
                                      elements[i].outcome + "' are not orthogonal");
            }
        }
    }
    m.projective_ = std::move(elements);
    return m;
}

Measurement Measurement::povm(size_t n,
                              size_t k,
                              size_t ancilla_dim,
                              std::vector<BasisLabel> basis,
                              std::vector<PovmElement> elements) {
    require(n >= 1 && k >= 1 && ancilla_dim >= 1, "POVM needs n, k, ancilla_dim >= 1");
    if (basis.empty() || elements.empty()) {
        throw ValidationError("POVM needs a nonempty basis and at least one element");
    }
    Measurement m;
    m.kind_ = Kind::kPovm;
    m.n_ = n;
    m.k_ = k;
    m.ancilla_dim_ = ancilla_dim;
    for (size_t i = 0; i < basis.size(); i++) {
        const BasisLabel &label = basis[i];
        if (label.tuple.size() != k) {
            throw ValidationError("POVM basis tuple " + label.tuple.str() + " does not have k entries");
        }
        for (uint32_t idx : label.tuple) {
            if (idx > n) {
                throw ValidationError("POVM basis tuple " + label.tuple.str() + " has an index above n");
            }
        }
        if (label.ancilla >= ancilla_dim) {
            throw ValidationError("POVM basis ancilla label out of range");
        }
        if (!m.basis_position_.emplace(label, i).second) {
            throw ValidationError("POVM basis repeats " + label.tuple.str());
        }
    }
    auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &e : elements) {
        if (e.matrix.rows() != dim || e.matrix.cols() != dim) {
            throw ValidationError("POVM element '" + e.outcome + "' has the wrong shape");
        }
        if ((e.matrix - e.matrix.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
            throw ValidationError("POVM element '" + e.outcome + "' is not Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e.matrix, Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -kTolerance) {
            throw ValidationError("POVM element '" + e.outcome + "' is not positive semidefinite");
        }
        total += e.matrix;
    }
    Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
    if ((total - identity).cwiseAbs().maxCoeff() > kTolerance) {
        throw ValidationError("POVM elements do not sum to the identity");
    }
    m.basis_ = std::move(basis);
    m.povm_ = std::move(elements);
    return m;
}

std::vector<std::string> Measurement::outcomes() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto visit = [&](const std::string &label) {
        if (seen.insert(label).second) {
            out.push_back(label);
        }
    };
    for (const auto &e : projective_) {
        visit(e.outcome);
    }
    for (const auto &e : povm_) {
        visit(e.outcome);
    }
    return out;
}

Measurement Measurement::relabeled(const std::function<std::string(const std::string &)> &relabel) const {
    Measurement m = *this;
    if (kind_ == Kind::kProjective) {
        for (auto &e : m.projective_) {
            e.outcome = relabel(e.outcome);
        }
        return m;
    }
    m.povm_.clear();
    std::map<std::string, size_t> slot;
    for (const auto &e : povm_) {
        std::string label = relabel(e.outcome);
        auto [it, fresh] = slot.emplace(label, m.povm_.size());
        if (fresh) {
            m.povm_.push_back(PovmElement{label, e.matrix});
        } else {
            m.povm_[it->second].matrix += e.matrix;
        }
    }
    return m;
}

Distribution measure(const QueryState &psi, const Measurement &meas) {
    require(psi.n() == meas.n() && psi.k() == meas.k() && psi.ancilla_dim() == meas.ancilla_dim(),
            "state and measurement live in different spaces");
    Distribution dist;
    if (meas.kind() == Measurement::Kind::kProjective) {
        std::set<BasisLabel> covered;
        for (const auto &e : meas.projective_elements()) {
            for (const auto &[label, amp] : e.state.entries()) {
                covered.insert(label);
            }
        }
        for (const auto &[label, amp] : psi.entries()) {
            if (!covered.contains(label)) {
                throw ContractViolation("state support " + label.tuple.str() +
                                        " is outside the measurement's declared basis");
            }
        }
        double total = 0;
        for (const auto &e : meas.projective_elements()) {
            double p = std::norm(inner_product(e.state, psi));
            dist[e.outcome] += p;
            total += p;
        }
        if (std::abs(total - psi.squared_norm()) > Measurement::kTolerance) {
            throw ContractViolation("projective measurement does not span the state");
        }
    } else {
        auto dim = static_cast<Eigen::Index>(meas.povm_basis().size());
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        for (const auto &[label, amp] : psi.entries()) {
            auto it = meas.basis_position_.find(label);
            if (it == meas.basis_position_.end()) {
                throw ContractViolation("state support " + label.tuple.str() +
                                        " is outside the measurement's declared basis");
            }
            v[static_cast<Eigen::Index>(it->second)] = amp;
        }
        for (const auto &e : meas.povm_elements()) {
            dist[e.outcome] += (v.adjoint() * e.matrix * v)(0, 0).real();
        }
    }
    for (auto &[label, p] : dist) {
        p = std::clamp(p, 0.0, 1.0);
    }
    return dist;
}

}  // namespace nonadapt

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

#ifndef NONADAPT_MEASUREMENT_H
#define NONADAPT_MEASUREMENT_H

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nonadapt/query_state.h"

namespace nonadapt {

/// Outcome label -> probability.
using Distribution = std::map<std::string, double>;

struct ProjectiveElement {
    std::string outcome;
    QueryState state;
};

struct PovmElement {
    std::string outcome;
    Eigen::MatrixXcd matrix;
};

/// A measurement on the query space, either a list of orthonormal states or a
/// POVM over an explicitly declared ordered basis. Labels may repeat; the
/// probabilities of repeated labels add. Validated on construction, immutable
/// afterwards.
class Measurement {
   public:
    enum class Kind { kProjective, kPovm };

    static constexpr double kTolerance = 1e-9;

    static Measurement projective(std::vector<ProjectiveElement> elements);
    /// Every element is a dim x dim matrix over `basis` (dim = basis size).
    static Measurement povm(size_t n,
                            size_t k,
                            size_t ancilla_dim,
                            std::vector<BasisLabel> basis,
                            std::vector<PovmElement> elements);

    Kind kind() const {
        return kind_;
    }
    size_t n() const {
        return n_;
    }
    size_t k() const {
        return k_;
    }
    size_t ancilla_dim() const {
        return ancilla_dim_;
    }

    const std::vector<ProjectiveElement> &projective_elements() const {
        return projective_;
    }
    const std::vector<BasisLabel> &povm_basis() const {
        return basis_;
    }
    const std::vector<PovmElement> &povm_elements() const {
        return povm_;
    }

    /// Distinct outcome labels in first-appearance order.
    std::vector<std::string> outcomes() const;

    /// Same operators with each outcome passed through `relabel`. POVM
    /// elements that end up sharing a label are summed.
    Measurement relabeled(const std::function<std::string(const std::string &)> &relabel) const;

   private:
    Measurement() = default;

    Kind kind_ = Kind::kProjective;
    size_t n_ = 0;
    size_t k_ = 0;
    size_t ancilla_dim_ = 1;
    std::vector<ProjectiveElement> projective_;
    std::vector<BasisLabel> basis_;
    std::map<BasisLabel, size_t> basis_position_;
    std::vector<PovmElement> povm_;

    friend Distribution measure(const QueryState &psi, const Measurement &meas);
};

/// Outcome distribution of measuring psi. Every declared outcome appears,
/// possibly with probability 0.
Distribution measure(const QueryState &psi, const Measurement &meas);

}  // namespace nonadapt

#endif

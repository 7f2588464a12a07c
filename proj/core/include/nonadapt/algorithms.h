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

#ifndef NONADAPT_ALGORITHMS_H
#define NONADAPT_ALGORITHMS_H

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nonadapt/concept_class.h"
#include "nonadapt/measurement.h"
#include "nonadapt/query_state.h"

namespace nonadapt {

/// A nonadaptive k-query algorithm: input state, final measurement, and a
/// classical map from measurement outcome to the reported answer (a bit for
/// computation, a concept string for learning). An empty postprocess is the
/// identity.
struct NonadaptiveAlgorithm {
    std::string name;
    QueryState psi;
    Measurement meas;
    std::function<std::string(const std::string &)> postprocess;

    size_t queries() const {
        return psi.k();
    }
    std::string answer(const std::string &outcome) const;
    /// The measurement with outcomes already mapped through postprocess.
    Measurement output_measurement() const;
};

/// Exact parity with ceil(n/2) queries: one register per pair of variables in
/// the state (|2i-1> + |2i>)/sqrt2 (the last register pairs |n> with |0> when
/// n is odd), each measured in its +- basis; the answer is the XOR of the
/// register outcomes.
NonadaptiveAlgorithm build_parity_algorithm(size_t n);

/// Uniform superposition over subsets of [n] of size <= k, each subset written
/// as its increasing index list padded with zeros to length k.
QueryState build_vandam_state(size_t n, size_t k);

/// N_k / 2^n with N_k = sum_{j <= k} C(n, j).
double vandam_closed_form(size_t n, size_t k);

enum class FourierPath {
    kFast,    // dense subset vector and an in-place Walsh-Hadamard transform
    kDirect,  // sparse state, summation over the support for every candidate
};

/// Distribution over the 2^n candidate strings (index = integer encoding) after
/// one application of O_x^{(x)k} to the van Dam state and a Fourier
/// measurement, plus a fail outcome absorbing any residual mass.
struct VanDamDistribution {
    size_t n = 0;
    size_t k = 0;
    std::vector<double> candidates;
    double fail = 0;

    double probability_of(const OracleString &y) const;
};

/// Accepts 0 <= k <= n; k = 0 means no query at all (uniform guess).
VanDamDistribution vandam_outcome_distribution(size_t n, size_t k, const OracleString &x,
                                               FourierPath path = FourierPath::kFast);

/// van Dam as an explicit learner of the full class {0,1}^n: the Fourier
/// family restricted to the state's support as a rank-one POVM plus a "fail"
/// element. Dense, so n is capped at 6.
NonadaptiveAlgorithm build_vandam_learner(size_t n, size_t k);

/// Bernstein-Vazirani as a concept-learning problem. Oracle index i in
/// [0, 2^b - 1] stands for the query string y_i = binary(i); concept s has bit
/// s.y_i mod 2 at index i. Index 0 is the all-zero query, consistent with
/// x_0 = 0.
struct BvInstance {
    size_t b = 0;
    ConceptClass concepts;
    NonadaptiveAlgorithm learner;
};

/// 1 <= b <= 4.
BvInstance build_bv_instance(size_t b);

/// The concept of hidden string s (s_1 least significant) over 2^b - 1 bits.
OracleString bv_concept(size_t b, uint64_t s);

/// Distribution of the learner's answers when the oracle hides x.
Distribution run_learning(const NonadaptiveAlgorithm &alg, const OracleString &x);

/// min and max over the class of Pr[answer = concept].
struct SuccessRange {
    double min = 1;
    double max = 0;
};
SuccessRange learning_success(const NonadaptiveAlgorithm &alg, const ConceptClass &concepts);

}  // namespace nonadapt

#endif

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

#ifndef NONADAPT_LEARNING_H
#define NONADAPT_LEARNING_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonadapt/algorithms.h"
#include "nonadapt/concept_class.h"
#include "nonadapt/query_state.h"

namespace nonadapt {

// Distinguishing sets ------------------------------------------------------

/// True iff the concepts restricted to `indices` (each in [1, n]) are pairwise
/// distinct.
bool is_distinguishing(const ConceptClass &concepts, std::span<const size_t> indices);

/// Same question for the tensor class C^{(x)k}: positions are index tuples.
bool is_distinguishing_tuples(const ConceptClass &concepts, std::span<const IndexTuple> positions);

enum class SearchMode { kExact, kGreedy };

inline constexpr size_t kExactSearchMaxVariables = 24;

/// kExact: a smallest distinguishing set, lexicographically first among those
/// (n <= 24). kGreedy: repeatedly adds the index separating the most pairs not
/// yet separated, lowest index on ties.
std::vector<size_t> min_distinguishing_set(const ConceptClass &concepts, SearchMode mode);

// Tensor class -------------------------------------------------------------

/// x_{i_1} xor ... xor x_{i_k}, with x_0 = 0.
uint8_t tensor_bit(const OracleString &x, const IndexTuple &t);

/// C^{(x)k}: the concepts x^{(x)k} over (n+1)^k positions. Bits are computed on
/// demand from the base class.
class TensorClass {
   public:
    TensorClass(ConceptClass base, size_t k);

    size_t k() const {
        return k_;
    }
    size_t m() const {
        return base_.m();
    }
    const ConceptClass &base() const {
        return base_;
    }
    /// (n+1)^k, saturating at SIZE_MAX.
    size_t positions() const;

    uint8_t bit(size_t concept_index, const IndexTuple &t) const;
    /// Position p in mixed radix n+1 with register 1 most significant.
    IndexTuple position(size_t p) const;
    /// Full bit string of one concept in position order. Throws for more
    /// than 2^20 positions.
    std::vector<uint8_t> materialize(size_t concept_index) const;
    /// Whether the materialized concepts are pairwise distinct.
    bool injective() const;

   private:
    ConceptClass base_;
    size_t k_;
};

TensorClass tensor_class(const ConceptClass &concepts, size_t k);

/// Membership-query access to a hidden string that counts queries.
class CountingOracle {
   public:
    explicit CountingOracle(OracleString x) : x_(std::move(x)) {
    }

    /// x_i for i in [1, n]; counts one query.
    uint8_t query(size_t i);
    size_t queries() const {
        return queries_;
    }
    size_t n() const {
        return x_.n();
    }

   private:
    OracleString x_;
    size_t queries_ = 0;
};

/// One query to x^{(x)k} answered with classical queries to x: every distinct
/// nonzero index of t is queried once, and the bits of indices with odd
/// multiplicity are XORed.
uint8_t simulate_tensor_query(const IndexTuple &t, CountingOracle &oracle);

// Overlap constraint and sampling -----------------------------------------

/// |alpha_i|^2 for i in [0, n].
class AmplitudeProfile {
   public:
    /// Throws ValidationError unless entries are nonnegative and sum to 1.
    explicit AmplitudeProfile(std::vector<double> p);
    static AmplitudeProfile uniform(size_t n, bool include_zero = true);
    /// A one-register state's squared amplitudes, summed over the ancilla.
    static AmplitudeProfile from_state(const QueryState &psi);

    size_t n() const {
        return p_.size() - 1;
    }
    double operator[](size_t i) const {
        return p_[i];
    }
    const std::vector<double> &values() const {
        return p_;
    }

   private:
    std::vector<double> p_;
};

/// Squared amplitudes of a k-register state by tuple (ancilla summed), in
/// canonical tuple order, zero entries dropped.
struct TupleProfile {
    size_t n = 0;
    size_t k = 0;
    std::vector<std::pair<IndexTuple, double>> weights;

    static TupleProfile from_state(const QueryState &psi);
    static TupleProfile from_amplitudes(const AmplitudeProfile &p);
};

struct PairCheck {
    size_t first = 0;
    size_t second = 0;
    /// (sum_t p_t (-1)^{x_t + y_t})^2
    double lhs = 0;
    /// threshold - lhs; negative on violation.
    double margin = 0;
    bool ok = true;
};

struct OverlapCheckReport {
    bool pass = true;
    double eps = 0;
    /// 4 eps (1 - eps)
    double threshold = 0;
    std::vector<PairCheck> pairs;

    std::vector<PairCheck> violations() const;
};

/// Checks the one-query almost-orthogonality constraint for every concept
/// pair: the squared overlap must not exceed 4 eps (1 - eps) (+1e-12).
OverlapCheckReport pairwise_overlap_check(const AmplitudeProfile &p, const ConceptClass &concepts, double eps);
/// The same constraint for C^{(x)k} under a k-register profile.
OverlapCheckReport pairwise_overlap_check(const TupleProfile &p, const ConceptClass &concepts, double eps);

/// 4 log2(m) / (1 - 2 sqrt(eps (1 - eps))), m >= 2, eps in [0, 1/2).
double lemma3_bound(size_t m, double eps);

/// m^2 (1/2 + sqrt(eps (1 - eps)))^draws: union bound on the probability that
/// `draws` samples leave some pair unseparated.
double lemma3_failure_bound(size_t m, double eps, size_t draws);

struct SampledSet {
    std::vector<size_t> indices;  // sorted, distinct, within [1, n]
    size_t zero_draws = 0;
    bool distinguishing = false;
};

/// k_draws independent draws from p. Draws of index 0 are counted but never
/// enter the set. Deterministic in `seed`.
SampledSet lemma3_sample(const AmplitudeProfile &p, const ConceptClass &concepts, size_t k_draws, uint64_t seed);

// Classical plans ----------------------------------------------------------

/// Nonadaptive classical learner: query `base_queries`, look the observed
/// pattern up in the decoder table.
class QueryPlan {
   public:
    /// Throws ValidationError when `base_queries` does not distinguish the
    /// class.
    QueryPlan(ConceptClass concepts, std::vector<size_t> base_queries);

    const std::vector<size_t> &base_queries() const {
        return base_queries_;
    }
    const ConceptClass &concepts() const {
        return concepts_;
    }
    /// Observed pattern (one char per base query, in order) -> concept index.
    const std::map<std::string, size_t> &decoder_table() const {
        return decoder_;
    }
    std::optional<size_t> decode(const std::string &pattern) const;
    std::string pattern_of(const OracleString &x) const;

   private:
    ConceptClass concepts_;
    std::vector<size_t> base_queries_;
    std::map<std::string, size_t> decoder_;
};

struct LearnOutcome {
    size_t concept_index = 0;
    size_t queries = 0;
};

/// Queries exactly plan.base_queries() and decodes. Throws InputOutsideClass
/// when the pattern belongs to no concept.
LearnOutcome classical_learn(const QueryPlan &plan, CountingOracle &oracle);

// Quantum-to-classical reduction ------------------------------------------

/// Thrown when a claimed error level is inconsistent with the learner's state:
/// some concept pair breaks the almost-orthogonality constraint.
class OverlapViolation : public std::runtime_error {
   public:
    OverlapViolation(const std::string &message, OverlapCheckReport report);
    const OverlapCheckReport &report() const {
        return report_;
    }

   private:
    OverlapCheckReport report_;
};

struct PipelineConfig {
    double eps = 0;
    uint64_t seed = 0;
    size_t retry_cap = 64;
};

struct PipelineResult {
    QueryPlan plan;
    OverlapCheckReport overlap;
    size_t m = 0;
    size_t k = 0;
    double eps = 0;
    /// 4 k log2(m) / (1 - 2 sqrt(eps (1 - eps))); 0 when m = 1.
    double bound = 0;
    size_t bound_ceiling = 0;
    size_t draws_per_attempt = 0;
    size_t attempts = 0;
    bool greedy_fallback = false;
    /// Tuples that made it into the distinguishing set for C^{(x)k}.
    std::vector<IndexTuple> tuples;
    /// k times the number of draws, the cost the bound is charged against.
    size_t charged_queries = 0;

    bool within_bound() const {
        return plan.base_queries().size() <= bound_ceiling;
    }
};

/// Turns a k-query quantum learner for `concepts` with error at most eps into
/// a certain classical nonadaptive plan:
///   1. collapse the learner state to a profile over query tuples;
///   2. check the almost-orthogonality constraint on C^{(x)k} (throws
///      OverlapViolation when it fails, i.e. the claimed eps is wrong);
///   3. draw floor(4 log2 m / (1 - 2 sqrt(eps(1-eps)))) tuples from the
///      profile, retrying with fresh sub-seeds until they distinguish C^{(x)k}
///      (greedy over the profile's support after `retry_cap` attempts);
///   4. replace each tuple by its distinct nonzero base indices;
///   5. build the decoder from the concepts' restrictions.
PipelineResult theorem2_pipeline(const NonadaptiveAlgorithm &learner,
                                 const ConceptClass &concepts,
                                 const PipelineConfig &config);

}  // namespace nonadapt

#endif

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

#ifndef NONADAPT_QUERY_STATE_H
#define NONADAPT_QUERY_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "nonadapt/oracle_string.h"

namespace nonadapt {

using Amplitude = std::complex<double>;

/// Basis label |i_1, ..., i_k> of the k-register query space. Ordered
/// lexicographically.
class IndexTuple {
   public:
    IndexTuple() = default;
    IndexTuple(std::initializer_list<uint32_t> indices) : indices_(indices) {
    }
    explicit IndexTuple(std::vector<uint32_t> indices) : indices_(std::move(indices)) {
    }

    size_t size() const {
        return indices_.size();
    }
    uint32_t operator[](size_t m) const {
        return indices_[m];
    }
    auto begin() const {
        return indices_.begin();
    }
    auto end() const {
        return indices_.end();
    }
    const std::vector<uint32_t> &indices() const {
        return indices_;
    }

    /// Number of registers holding index j.
    size_t multiplicity(uint32_t j) const;
    /// Sorted distinct nonzero indices.
    std::vector<uint32_t> distinct_nonzero() const;
    /// Sorted indices that occur an odd number of times (0 excluded).
    std::vector<uint32_t> odd_indices() const;
    /// Throws ContractViolation unless every entry lies in [0, n].
    void check_range(size_t n) const;

    std::string str() const;

    auto operator<=>(const IndexTuple &) const = default;
    bool operator==(const IndexTuple &) const = default;

   private:
    std::vector<uint32_t> indices_;
};

/// (-1)^(x_{i_1} + ... + x_{i_k}) with x_0 = 0.
int oracle_phase(const OracleString &x, const IndexTuple &t);

struct BasisLabel {
    IndexTuple tuple;
    uint32_t ancilla = 0;

    auto operator<=>(const BasisLabel &) const = default;
    bool operator==(const BasisLabel &) const = default;
};

/// Sparse pure state on (n+1)^k query registers times an ancilla of dimension
/// ancilla_dim. Absent entries are zero. Iteration order is canonical (tuple
/// lexicographic, then ancilla).
class QueryState {
   public:
    using Entries = std::map<BasisLabel, Amplitude>;

    QueryState(size_t n, size_t k, size_t ancilla_dim = 1);

    static QueryState basis(size_t n, const IndexTuple &t, uint32_t ancilla = 0, size_t ancilla_dim = 1);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return k_;
    }
    size_t ancilla_dim() const {
        return ancilla_dim_;
    }

    /// Adds `value` to the amplitude of |t>|ancilla>.
    void add(const IndexTuple &t, Amplitude value, uint32_t ancilla = 0);
    /// Overwrites the amplitude of |t>|ancilla>; zero removes the entry.
    void set(const IndexTuple &t, Amplitude value, uint32_t ancilla = 0);
    Amplitude amplitude(const IndexTuple &t, uint32_t ancilla = 0) const;

    const Entries &entries() const {
        return entries_;
    }
    size_t support_size() const {
        return entries_.size();
    }

    double squared_norm() const;
    /// Scales to unit norm and drops exact zeros. Throws ValidationError on the
    /// zero vector.
    QueryState &normalize();
    bool is_normalized(double tol = 1e-9) const;

    /// True when n, k and ancilla_dim agree.
    bool same_space(const QueryState &other) const;

    /// Multiplies every amplitude by `phase`; used internally by the oracle.
    void scale(Amplitude factor);

    bool operator==(const QueryState &) const = default;

   private:
    void check_label(const IndexTuple &t, uint32_t ancilla) const;

    size_t n_;
    size_t k_;
    size_t ancilla_dim_;
    Entries entries_;
};

/// O_x^{(x)k} applied to psi. The ancilla is untouched.
QueryState apply_oracle(const QueryState &psi, const OracleString &x);

/// <a|b>, conjugate-linear in a.
Amplitude inner_product(const QueryState &a, const QueryState &b);

/// |a>|b> on k_a + k_b registers. Ancilla labels combine as a * dim_b + b.
QueryState tensor_product(const QueryState &a, const QueryState &b);

}  // namespace nonadapt

#endif

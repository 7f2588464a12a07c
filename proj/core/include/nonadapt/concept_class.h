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

#ifndef NONADAPT_CONCEPT_CLASS_H
#define NONADAPT_CONCEPT_CLASS_H

#include <cstddef>
#include <optional>
#include <vector>

#include "nonadapt/oracle_string.h"

namespace nonadapt {

/// A set of m pairwise distinct n-bit concepts, kept in ingestion order.
class ConceptClass {
   public:
    /// Throws ValidationError on duplicates or length mismatch.
    ConceptClass(size_t n, std::vector<OracleString> concepts);

    /// All 2^n strings in integer order.
    static ConceptClass full(size_t n);

    size_t n() const {
        return n_;
    }
    size_t m() const {
        return concepts_.size();
    }
    const OracleString &operator[](size_t i) const {
        return concepts_[i];
    }
    const std::vector<OracleString> &concepts() const {
        return concepts_;
    }
    std::optional<size_t> index_of(const OracleString &x) const;

   private:
    size_t n_;
    std::vector<OracleString> concepts_;
};

}  // namespace nonadapt

#endif

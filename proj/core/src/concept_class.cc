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

#include "nonadapt/concept_class.h"

#include <set>

#include "nonadapt/errors.h"

namespace nonadapt {

ConceptClass::ConceptClass(size_t n, std::vector<OracleString> concepts) : n_(n), concepts_(std::move(concepts)) {
    if (n_ < 1) {
        throw ValidationError("concept class needs n >= 1");
    }
    if (concepts_.empty()) {
        throw ValidationError("concept class is empty");
    }
    std::set<OracleString> seen;
    for (const auto &x : concepts_) {
        if (x.n() != n_) {
            throw ValidationError("concept " + x.str() + " does not have " + std::to_string(n_) + " bits");
        }
        if (!seen.insert(x).second) {
            throw ValidationError("duplicate concept " + x.str());
        }
    }
}

ConceptClass ConceptClass::full(size_t n) {
    require(n >= 1 && n <= 24, "full class supports 1 <= n <= 24");
    std::vector<OracleString> all;
    all.reserve(size_t{1} << n);
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        all.push_back(OracleString::from_index(v, n));
    }
    return ConceptClass(n, std::move(all));
}

std::optional<size_t> ConceptClass::index_of(const OracleString &x) const {
    for (size_t i = 0; i < concepts_.size(); i++) {
        if (concepts_[i] == x) {
            return i;
        }
    }
    return std::nullopt;
}

}  // namespace nonadapt

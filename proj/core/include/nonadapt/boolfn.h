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

#ifndef NONADAPT_BOOLFN_H
#define NONADAPT_BOOLFN_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nonadapt/oracle_string.h"

namespace nonadapt {

/// Total boolean function on n <= 20 bits, stored as a truth table indexed by
/// the integer encoding of x (x_1 is the least significant bit).
class TotalFunction {
   public:
    static constexpr size_t kMaxVariables = 20;

    static TotalFunction from_table(size_t n, std::vector<uint8_t> table);
    static TotalFunction constant(size_t n, bool value);

    size_t n() const {
        return n_;
    }
    const std::vector<uint8_t> &table() const {
        return table_;
    }

    uint8_t at(uint64_t index) const {
        return table_[index];
    }
    uint8_t operator()(const OracleString &x) const;

    /// Variable j (1-based) is relevant iff some x has f(x) != f(x ^ e^j).
    bool depends_on(size_t j) const;
    std::vector<size_t> relevant_variables() const;

    bool operator==(const TotalFunction &) const = default;

   private:
    TotalFunction(size_t n, std::vector<uint8_t> table) : n_(n), table_(std::move(table)) {
    }

    size_t n_;
    std::vector<uint8_t> table_;
};

enum class FunctionKind { kParity, kAnd, kOr, kMajority };

/// Standard truth tables. Majority requires odd n.
TotalFunction build_function(FunctionKind kind, size_t n);

/// Smallest (by integer encoding) x with f(x) != f(x ^ e^j), if any.
std::optional<OracleString> sensitive_witness(const TotalFunction &f, size_t j);

}  // namespace nonadapt

#endif

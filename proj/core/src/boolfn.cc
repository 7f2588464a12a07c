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

#include "nonadapt/boolfn.h"

#include <bit>

#include "nonadapt/errors.h"

namespace nonadapt {

TotalFunction TotalFunction::from_table(size_t n, std::vector<uint8_t> table) {
    if (n < 1 || n > kMaxVariables) {
        throw ValidationError("truth tables support 1 <= n <= 20, got n = " + std::to_string(n));
    }
    if (table.size() != (size_t{1} << n)) {
        throw ValidationError("truth table for n = " + std::to_string(n) + " needs " +
                              std::to_string(size_t{1} << n) + " entries, got " + std::to_string(table.size()));
    }
    for (uint8_t v : table) {
        if (v > 1) {
            throw ValidationError("truth table entries must be 0 or 1");
        }
    }
    return TotalFunction(n, std::move(table));
}

TotalFunction TotalFunction::constant(size_t n, bool value) {
    require(n >= 1 && n <= kMaxVariables, "truth tables support 1 <= n <= 20");
    return TotalFunction(n, std::vector<uint8_t>(size_t{1} << n, value ? 1 : 0));
}

uint8_t TotalFunction::operator()(const OracleString &x) const {
    require(x.n() == n_, "input length does not match the function's n");
    return table_[x.to_index()];
}

bool TotalFunction::depends_on(size_t j) const {
    require(j >= 1 && j <= n_, "variable index outside [1, n]");
    uint64_t mask = uint64_t{1} << (j - 1);
    for (uint64_t x = 0; x < table_.size(); x++) {
        if (!(x & mask) && table_[x] != table_[x | mask]) {
            return true;
        }
    }
    return false;
}

std::vector<size_t> TotalFunction::relevant_variables() const {
    std::vector<size_t> out;
    for (size_t j = 1; j <= n_; j++) {
        if (depends_on(j)) {
            out.push_back(j);
        }
    }
    return out;
}

TotalFunction build_function(FunctionKind kind, size_t n) {
    if (n < 1 || n > TotalFunction::kMaxVariables) {
        throw ValidationError("truth tables support 1 <= n <= 20");
    }
    if (kind == FunctionKind::kMajority && n % 2 == 0) {
        throw ValidationError("majority needs an odd number of variables");
    }
    size_t size = size_t{1} << n;
    uint64_t all = size - 1;
    std::vector<uint8_t> table(size);
    for (uint64_t x = 0; x < size; x++) {
        int ones = std::popcount(x);
        switch (kind) {
            case FunctionKind::kParity:
                table[x] = ones & 1;
                break;
            case FunctionKind::kAnd:
                table[x] = x == all;
                break;
            case FunctionKind::kOr:
                table[x] = x != 0;
                break;
            case FunctionKind::kMajority:
                table[x] = 2 * static_cast<size_t>(ones) > n;
                break;
        }
    }
    return TotalFunction::from_table(n, std::move(table));
}

std::optional<OracleString> sensitive_witness(const TotalFunction &f, size_t j) {
    require(j >= 1 && j <= f.n(), "variable index outside [1, n]");
    uint64_t mask = uint64_t{1} << (j - 1);
    for (uint64_t x = 0; x < f.table().size(); x++) {
        if (f.at(x) != f.at(x ^ mask)) {
            return OracleString::from_index(x, f.n());
        }
    }
    return std::nullopt;
}

}  // namespace nonadapt

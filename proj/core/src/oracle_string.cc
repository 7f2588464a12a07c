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

#include "nonadapt/oracle_string.h"

#include <algorithm>

#include "nonadapt/errors.h"

namespace nonadapt {

OracleString::OracleString(size_t n) : bits_(n, 0) {
}

OracleString OracleString::from_string(std::string_view bits) {
    OracleString x(bits.size());
    for (size_t j = 0; j < bits.size(); j++) {
        char c = bits[j];
        if (c != '0' && c != '1') {
            throw ValidationError("oracle string characters must be 0 or 1, got '" + std::string(1, c) + "'");
        }
        x.bits_[j] = static_cast<uint8_t>(c - '0');
    }
    return x;
}

OracleString OracleString::from_index(uint64_t value, size_t n) {
    require(n <= 63, "integer encoding supports at most 63 bits");
    require(n == 63 || value < (uint64_t{1} << n), "integer encoding does not fit in n bits");
    OracleString x(n);
    for (size_t j = 0; j < n; j++) {
        x.bits_[j] = static_cast<uint8_t>((value >> j) & 1);
    }
    return x;
}

OracleString OracleString::unit(size_t n, size_t j) {
    OracleString x(n);
    x.set(j, true);
    return x;
}

uint8_t OracleString::operator[](size_t i) const {
    if (i == 0) {
        return 0;
    }
    if (i > bits_.size()) {
        throw ContractViolation("oracle index " + std::to_string(i) + " outside [0, " + std::to_string(bits_.size()) +
                                "]");
    }
    return bits_[i - 1];
}

void OracleString::set(size_t j, bool value) {
    require(j >= 1 && j <= bits_.size(), "variable index outside [1, n]");
    bits_[j - 1] = value ? 1 : 0;
}

OracleString OracleString::flipped(size_t j) const {
    require(j >= 1 && j <= bits_.size(), "variable index outside [1, n]");
    OracleString y = *this;
    y.bits_[j - 1] ^= 1;
    return y;
}

OracleString OracleString::complement() const {
    OracleString y = *this;
    for (auto &b : y.bits_) {
        b ^= 1;
    }
    return y;
}

OracleString OracleString::operator^(const OracleString &other) const {
    require(n() == other.n(), "oracle strings of different length");
    OracleString y = *this;
    for (size_t j = 0; j < bits_.size(); j++) {
        y.bits_[j] ^= other.bits_[j];
    }
    return y;
}

uint64_t OracleString::to_index() const {
    require(bits_.size() <= 63, "integer encoding supports at most 63 bits");
    uint64_t v = 0;
    for (size_t j = 0; j < bits_.size(); j++) {
        v |= uint64_t{bits_[j]} << j;
    }
    return v;
}

std::string OracleString::str() const {
    std::string s(bits_.size(), '0');
    for (size_t j = 0; j < bits_.size(); j++) {
        s[j] = static_cast<char>('0' + bits_[j]);
    }
    return s;
}

size_t OracleString::popcount() const {
    return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), uint8_t{1}));
}

}  // namespace nonadapt

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

#ifndef NONADAPT_ORACLE_STRING_H
#define NONADAPT_ORACLE_STRING_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nonadapt {

/// An n-bit input string x_1..x_n addressed by oracle index.
///
/// Index 0 is always readable and always yields 0: the phase oracle leaves
/// |0> untouched, so an algorithm has a fixed phase reference. Text form lists
/// x_1 first ("01" means x_1 = 0, x_2 = 1). Integer form puts x_1 in the least
/// significant bit, matching truth-table order.
class OracleString {
   public:
    OracleString() = default;
    explicit OracleString(size_t n);

    static OracleString from_string(std::string_view bits);
    static OracleString from_index(uint64_t value, size_t n);
    /// e^j: the string with a single 1 at position j.
    static OracleString unit(size_t n, size_t j);

    size_t n() const {
        return bits_.size();
    }

    /// x_i for i in [0, n]; x_0 = 0.
    uint8_t operator[](size_t i) const;
    void set(size_t j, bool value);

    /// x xor e^j.
    OracleString flipped(size_t j) const;
    OracleString complement() const;
    OracleString operator^(const OracleString &other) const;

    uint64_t to_index() const;
    std::string str() const;
    size_t popcount() const;

    auto operator<=>(const OracleString &) const = default;
    bool operator==(const OracleString &) const = default;

   private:
    std::vector<uint8_t> bits_;  // bits_[j - 1] holds x_j
};

}  // namespace nonadapt

#endif

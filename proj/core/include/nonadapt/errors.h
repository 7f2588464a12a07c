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

#ifndef NONADAPT_ERRORS_H
#define NONADAPT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonadapt {

/// A caller broke an operation's precondition (index out of range, mismatched
/// dimensions, arguments outside their documented domain).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A value was well formed but failed a semantic check (bad truth-table
/// length, duplicate concepts, invalid measurement, constant function).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, size_t line, size_t column);

    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }

   private:
    size_t line_;
    size_t column_;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A classical plan observed a bit pattern that no concept of its class produces.
struct InputOutsideClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const char *message) {
    if (!condition) {
        throw ContractViolation(message);
    }
}

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw ContractViolation(message);
    }
}

}  // namespace nonadapt

#endif

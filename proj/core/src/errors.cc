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

#include "nonadapt/errors.h"

namespace nonadapt {

namespace {

std::string locate(const std::string &message, size_t line, size_t column) {
    if (line == 0) {
        return message;
    }
    std::string where = "line " + std::to_string(line);
    if (column != 0) {
        where += ", column " + std::to_string(column);
    }
    return where + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string &message, size_t line, size_t column)
    : std::runtime_error(locate(message, line, column)), line_(line), column_(column) {
}

}  // namespace nonadapt

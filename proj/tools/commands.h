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

#ifndef NONADAPT_TOOLS_COMMANDS_H
#define NONADAPT_TOOLS_COMMANDS_H

#include <ostream>

namespace nonadapt::cli {

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

/// Runs the `nonadapt` command line. Records go to `out` (unless --out is
/// given), diagnostics to `err`. Never throws.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace nonadapt::cli

#endif

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

#include "nonadapt/parallel.h"

#include <cstdlib>
#include <string>

namespace nonadapt {

size_t worker_count() {
    if (const char *env = std::getenv("NONADAPT_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<size_t>(v);
            }
        } catch (const std::exception &) {
            // Unparseable values fall through to the default.
        }
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace nonadapt

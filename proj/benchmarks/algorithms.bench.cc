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

#include "benchmark/benchmark.h"
#include "nonadapt/algorithms.h"

using namespace nonadapt;

namespace {

void BM_vandam_fast(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    OracleString x = OracleString::from_index((uint64_t{1} << n) / 3, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vandam_outcome_distribution(n, n / 2, x, FourierPath::kFast));
    }
}
BENCHMARK(BM_vandam_fast)->DenseRange(4, 16, 4);

void BM_vandam_direct(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    OracleString x = OracleString::from_index((uint64_t{1} << n) / 3, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vandam_outcome_distribution(n, n / 2, x, FourierPath::kDirect));
    }
}
BENCHMARK(BM_vandam_direct)->DenseRange(4, 10, 2);

void BM_parity_learning(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    NonadaptiveAlgorithm alg = build_parity_algorithm(n);
    OracleString x = OracleString::from_index(5, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_learning(alg, x));
    }
}
BENCHMARK(BM_parity_learning)->DenseRange(4, 10, 2);

}  // namespace

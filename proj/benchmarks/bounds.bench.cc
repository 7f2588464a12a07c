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
#include "nonadapt/boolfn.h"
#include "nonadapt/bounds.h"
#include "nonadapt/random.h"

using namespace nonadapt;

namespace {

void BM_weight_profile(benchmark::State &state) {
    auto k = static_cast<size_t>(state.range(0));
    auto rng = make_stream(1, "bench/weights");
    QueryState psi = random_state(8, k, 1, 0, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_profile(psi));
    }
    state.SetLabel(std::to_string(psi.support_size()) + " amplitudes");
}
BENCHMARK(BM_weight_profile)->DenseRange(1, 3);

void BM_worst_case_error_parity(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    NonadaptiveAlgorithm alg = build_parity_algorithm(n);
    Measurement meas = alg.output_measurement();
    TotalFunction f = build_function(FunctionKind::kParity, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(worst_case_error(alg.psi, meas, f));
    }
}
BENCHMARK(BM_worst_case_error_parity)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_worst_case_error_povm(benchmark::State &state) {
    auto rng = make_stream(2, "bench/povm");
    QueryState psi = random_state(5, 2, 1, 0, rng);
    Measurement meas = random_two_outcome_povm(psi, support_basis(psi), rng);
    TotalFunction f = build_function(FunctionKind::kMajority, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(worst_case_error(psi, meas, f));
    }
}
BENCHMARK(BM_worst_case_error_povm)->Unit(benchmark::kMillisecond);

}  // namespace

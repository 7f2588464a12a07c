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
#include "nonadapt/learning.h"

using namespace nonadapt;

namespace {

void BM_pipeline_bv(benchmark::State &state) {
    BvInstance inst = build_bv_instance(static_cast<size_t>(state.range(0)));
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem2_pipeline(inst.learner, inst.concepts, PipelineConfig{0.0, seed++, 64}));
    }
}
BENCHMARK(BM_pipeline_bv)->DenseRange(2, 4);

void BM_pipeline_vandam(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    NonadaptiveAlgorithm alg = build_vandam_learner(n, n - 1);
    ConceptClass full = ConceptClass::full(n);
    double eps = 1 - learning_success(alg, full).min;
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem2_pipeline(alg, full, PipelineConfig{eps, seed++, 64}));
    }
}
BENCHMARK(BM_pipeline_vandam)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_min_distinguishing_exact(benchmark::State &state) {
    ConceptClass full = ConceptClass::full(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distinguishing_set(full, SearchMode::kExact));
    }
}
BENCHMARK(BM_min_distinguishing_exact)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_min_distinguishing_greedy(benchmark::State &state) {
    ConceptClass full = ConceptClass::full(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distinguishing_set(full, SearchMode::kGreedy));
    }
}
BENCHMARK(BM_min_distinguishing_greedy)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

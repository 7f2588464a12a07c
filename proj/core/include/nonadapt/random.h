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

#ifndef NONADAPT_RANDOM_H
#define NONADAPT_RANDOM_H

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "nonadapt/measurement.h"
#include "nonadapt/query_state.h"

namespace nonadapt {

/// 64-bit FNV-1a. Stable across platforms; used for stream names and content
/// digests.
uint64_t fnv1a(std::string_view s);

/// Seed of the named sub-stream `stream` of a run seeded with `seed`. Each
/// subcomponent draws from its own stream, so adding or reordering consumers
/// never shifts another consumer's numbers.
uint64_t derive_seed(uint64_t seed, std::string_view stream);

std::mt19937_64 make_stream(uint64_t seed, std::string_view stream);

/// Uniform double in [0, 1) from the top 53 bits of one draw. Portable across
/// standard libraries, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64 &rng);
/// Uniform integer in [0, bound).
uint64_t uniform_below(std::mt19937_64 &rng, uint64_t bound);
double standard_normal(std::mt19937_64 &rng);

/// Random normalized state with complex Gaussian amplitudes. When
/// `support` is nonzero, only that many distinct basis labels (chosen
/// uniformly) are populated; otherwise every label of the space is.
QueryState random_state(size_t n, size_t k, size_t ancilla_dim, size_t support, std::mt19937_64 &rng);

/// Haar-ish random unitary (QR of a complex Gaussian matrix, phases fixed).
Eigen::MatrixXcd random_unitary(size_t dim, std::mt19937_64 &rng);

/// Two-outcome POVM {M_0, I - M_0} over `basis`, labeled "0" and "1", where
/// M_0 has a random eigenbasis and eigenvalues uniform in [0, 1]. `space`
/// supplies n, k and the ancilla dimension.
Measurement random_two_outcome_povm(const QueryState &space, const std::vector<BasisLabel> &basis, std::mt19937_64 &rng);

/// Every basis label of a state's support, in canonical order.
std::vector<BasisLabel> support_basis(const QueryState &psi);

}  // namespace nonadapt

#endif

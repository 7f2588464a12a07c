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

#ifndef NONADAPT_BOUNDS_H
#define NONADAPT_BOUNDS_H

#include <cstddef>
#include <optional>
#include <vector>

#include "nonadapt/boolfn.h"
#include "nonadapt/measurement.h"
#include "nonadapt/query_state.h"

namespace nonadapt {

/// Slack for quantities derived from measurement linear algebra.
inline constexpr double kMeasurementSlack = 1e-9;
/// Slack for pure sign arithmetic.
inline constexpr double kSignSlack = 1e-12;

/// Error levels within kMeasurementSlack of 0 are rounding noise of an exact
/// algorithm; bounds evaluated at them use 0.
inline double snap_error(double eps) {
    return eps <= kMeasurementSlack ? 0.0 : eps;
}

/// Query weights W_1..W_n of a state.
struct WeightProfile {
    size_t n = 0;
    size_t k = 0;
    std::vector<double> w;  // w[j - 1] = W_j

    double total() const;
};

/// W_j: squared-amplitude mass (summed over the ancilla) on tuples that hold j
/// an odd number of times.
double weight(const QueryState &psi, size_t j);
WeightProfile weight_profile(const QueryState &psi);

/// <psi|(O_x O_y)^{(x)k}|psi>. Real because the operator is diagonal in +-1.
double overlap_after_oracles(const QueryState &psi, const OracleString &x, const OracleString &y);

/// overlap_sq <= 4 eps (1 - eps), with kSignSlack.
bool fact1_holds(double overlap_sq, double eps);

/// Minimum worst-case error for telling apart two equiprobable pure states
/// whose overlap has magnitude `overlap_abs`: (1 - sqrt(1 - c^2)) / 2.
double helstrom_error(double overlap_abs);

/// Largest per-variable error floor max_j helstrom_error(|1 - 2 W_j|) over the
/// relevant variables of f. Throws ValidationError when f is constant.
double epsilon_lower_bound(const QueryState &psi, const TotalFunction &f);

/// n/2 (1 - 2 sqrt(eps (1 - eps))) for eps in [0, 1/2].
double theorem1_min_queries(size_t n, double eps);

/// max_x Pr[output != f(x)] for the two-outcome measurement labeled "0"/"1"
/// applied to O_x^{(x)k}|psi>, by exhaustive sweep over all 2^n inputs.
double worst_case_error(const QueryState &psi, const Measurement &meas, const TotalFunction &f);

struct BoundReport {
    size_t n = 0;
    size_t n_eff = 0;
    size_t k = 0;
    std::vector<double> weights;
    double eps_lower_bound = 0;
    /// Error level the query bound was evaluated at.
    double eps = 0;
    double theorem1_rhs = 0;
    std::optional<double> worst_case_error;
    bool pass = false;
};

/// Bounds a state (and optionally a complete algorithm) against f.
///
/// The error level is the measured worst-case error when a measurement is
/// given, else `claimed_eps` when given, else the per-variable floor. The
/// query bound uses the number of relevant variables and clamps the error
/// level to 1/2 (beyond that the bound is vacuous). The report passes when the
/// error level respects the floor, k meets the query bound, and the weights
/// sum to at most k.
BoundReport verify_bound(const QueryState &psi,
                         const TotalFunction &f,
                         const std::optional<Measurement> &meas = std::nullopt,
                         std::optional<double> claimed_eps = std::nullopt);

}  // namespace nonadapt

#endif

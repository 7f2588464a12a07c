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

#include "nonadapt/bounds.h"

#include <algorithm>
#include <cmath>

#include "nonadapt/errors.h"
#include "nonadapt/parallel.h"

namespace nonadapt {

double WeightProfile::total() const {
    double s = 0;
    for (double v : w) {
        s += v;
    }
    return s;
}

double weight(const QueryState &psi, size_t j) {
    require(j >= 1 && j <= psi.n(), "variable index outside [1, n]");
    double total = 0;
    for (const auto &[label, amp] : psi.entries()) {
        if (label.tuple.multiplicity(static_cast<uint32_t>(j)) % 2 == 1) {
            total += std::norm(amp);
        }
    }
    return total;
}

WeightProfile weight_profile(const QueryState &psi) {
    WeightProfile profile{psi.n(), psi.k(), std::vector<double>(psi.n(), 0.0)};
    // One pass over the support instead of n passes.
    for (const auto &[label, amp] : psi.entries()) {
        double mass = std::norm(amp);
        for (uint32_t j : label.tuple.odd_indices()) {
            profile.w[j - 1] += mass;
        }
    }
    return profile;
}

double overlap_after_oracles(const QueryState &psi, const OracleString &x, const OracleString &y) {
    require(psi.n() == x.n() && psi.n() == y.n(), "oracle string length does not match the state's n");
    OracleString diff = x ^ y;
    double total = 0;
    for (const auto &[label, amp] : psi.entries()) {
        total += oracle_phase(diff, label.tuple) * std::norm(amp);
    }
    return total;
}

bool fact1_holds(double overlap_sq, double eps) {
    require(overlap_sq >= 0 && overlap_sq <= 1, "squared overlap outside [0, 1]");
    require(eps >= 0 && eps <= 0.5, "error level outside [0, 1/2]");
    return overlap_sq <= 4 * eps * (1 - eps) + kSignSlack;
}

double helstrom_error(double overlap_abs) {
    require(overlap_abs >= 0 && overlap_abs <= 1, "overlap magnitude outside [0, 1]");
    double c2 = overlap_abs * overlap_abs;
    // (1 - sqrt(1 - c^2)) / 2 rewritten to avoid cancellation for small c.
    return c2 / (2 * (1 + std::sqrt(1 - c2)));
}

double epsilon_lower_bound(const QueryState &psi, const TotalFunction &f) {
    require(psi.n() == f.n(), "state and function disagree on n");
    std::vector<size_t> relevant = f.relevant_variables();
    if (relevant.empty()) {
        throw ValidationError("function is constant: no sensitive pairs to bound");
    }
    WeightProfile profile = weight_profile(psi);
    double best = 0;
    for (size_t j : relevant) {
        double c = std::min(1.0, std::abs(1 - 2 * profile.w[j - 1]));
        best = std::max(best, helstrom_error(c));
    }
    return best;
}

double theorem1_min_queries(size_t n, double eps) {
    require(n >= 1, "n must be positive");
    require(eps >= 0 && eps <= 0.5, "error level outside [0, 1/2]");
    return static_cast<double>(n) / 2 * (1 - 2 * std::sqrt(eps * (1 - eps)));
}

double worst_case_error(const QueryState &psi, const Measurement &meas, const TotalFunction &f) {
    require(psi.n() == f.n(), "state and function disagree on n");
    size_t inputs = f.table().size();
    std::vector<double> errors(inputs, 0.0);
    parallel_for(inputs, [&](size_t idx) {
        OracleString x = OracleString::from_index(idx, f.n());
        Distribution dist = measure(apply_oracle(psi, x), meas);
        auto it = dist.find(f.at(idx) ? "1" : "0");
        double correct = it == dist.end() ? 0.0 : it->second;
        errors[idx] = std::clamp(1.0 - correct, 0.0, 1.0);
    });
    return *std::max_element(errors.begin(), errors.end());
}

BoundReport verify_bound(const QueryState &psi,
                         const TotalFunction &f,
                         const std::optional<Measurement> &meas,
                         std::optional<double> claimed_eps) {
    BoundReport report;
    report.n = psi.n();
    report.k = psi.k();
    report.n_eff = f.relevant_variables().size();
    report.eps_lower_bound = epsilon_lower_bound(psi, f);
    WeightProfile profile = weight_profile(psi);
    report.weights = profile.w;
    if (meas) {
        report.worst_case_error = worst_case_error(psi, *meas, f);
        report.eps = *report.worst_case_error;
    } else if (claimed_eps) {
        require(*claimed_eps >= 0 && *claimed_eps <= 1, "claimed error outside [0, 1]");
        report.eps = *claimed_eps;
    } else {
        report.eps = report.eps_lower_bound;
    }
    report.theorem1_rhs = theorem1_min_queries(report.n_eff, std::min(snap_error(report.eps), 0.5));
    double k = static_cast<double>(report.k);
    report.pass = report.eps >= report.eps_lower_bound - kMeasurementSlack &&
                  k >= report.theorem1_rhs - kMeasurementSlack && profile.total() <= k + kMeasurementSlack;
    return report;
}

}  // namespace nonadapt

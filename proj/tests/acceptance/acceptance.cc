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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nonadapt/algorithms.h"
#include "nonadapt/boolfn.h"
#include "nonadapt/bounds.h"
#include "nonadapt/learning.h"
#include "nonadapt/random.h"
#include "support/oracles.h"

using namespace nonadapt;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::string fmt(const char *pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// 1 ------------------------------------------------------------------------

Outcome parity_tightness() {
    Outcome o;
    double worst = 0;
    for (size_t n = 2; n <= 10; n++) {
        NonadaptiveAlgorithm alg = build_parity_algorithm(n);
        TotalFunction f = build_function(FunctionKind::kParity, n);
        double wce = worst_case_error(alg.psi, alg.output_measurement(), f);
        double rhs = theorem1_min_queries(n, 0);
        size_t k = alg.queries();
        worst = std::max(worst, wce);
        bool ok = wce <= 1e-9 && k == (n + 1) / 2 && std::abs(rhs - n / 2.0) <= 1e-12 &&
                  rhs <= static_cast<double>(k);
        if (!ok) {
            o.ok = false;
            o.detail += fmt(" n=%zu: wce=%.3g k=%zu rhs=%.6f;", n, wce, k, rhs);
        }
    }
    if (o.ok) {
        o.detail = fmt("n=2..10, k=ceil(n/2), max wce %.2g", worst);
    }
    return o;
}

// 2 ------------------------------------------------------------------------

Outcome counting_inequality() {
    Outcome o;
    auto rng = make_stream(2026, "acceptance/counting");
    double max_excess = -1e300;
    double max_identity_gap = 0;
    const int trials = 10000;
    for (int trial = 0; trial < trials; trial++) {
        size_t n = 1 + static_cast<size_t>(trial % 8);
        size_t k = 1 + static_cast<size_t>((trial / 8) % 3);
        size_t full = static_cast<size_t>(std::pow(n + 1, k));
        size_t support = trial % 2 == 0 ? 0 : 1 + uniform_below(rng, full);
        QueryState psi = random_state(n, k, 1, support, rng);
        WeightProfile w = weight_profile(psi);
        max_excess = std::max(max_excess, w.total() - static_cast<double>(k));
        OracleString x = OracleString::from_index(uniform_below(rng, uint64_t{1} << n), n);
        for (size_t j = 1; j <= n; j++) {
            double lhs = overlap_after_oracles(psi, x, x ^ OracleString::unit(n, j));
            max_identity_gap = std::max(max_identity_gap, std::abs(lhs - (1 - 2 * w.w[j - 1])));
        }
    }
    o.ok = max_excess <= 1e-9 && max_identity_gap <= 1e-12;
    o.detail = fmt("%d states, max(sum W - k) = %.3g, max identity gap = %.2g", trials, max_excess,
                   max_identity_gap);
    return o;
}

// 3 ------------------------------------------------------------------------

Outcome helstrom_tightness() {
    Outcome o;
    auto rng = make_stream(2026, "acceptance/helstrom");
    double max_gap = 0;
    int boundary_checked = 0;
    int failures = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; trial++) {
        size_t n = 1 + uniform_below(rng, 4);
        size_t k = 1 + uniform_below(rng, 2);
        QueryState a = random_state(n, k, 1, 0, rng);
        QueryState chi = random_state(n, k, 1, 0, rng);
        // Mix toward a so overlaps cover (0, 1].
        double t = uniform01(rng);
        QueryState b = a;
        b.scale(t);
        for (const auto &[label, amp] : chi.entries()) {
            b.add(label.tuple, (1 - t) * amp, label.ancilla);
        }
        b.normalize();
        double c = std::abs(inner_product(a, b));
        double c2 = c * c;
        double eps = helstrom_error(c);
        max_gap = std::max(max_gap, std::abs(4 * eps * (1 - eps) - c2));
        if (!fact1_holds(c2, eps)) {
            failures++;
        }
        if (eps > 1e-3) {
            boundary_checked++;
            if (fact1_holds(c2, eps - 1e-3)) {
                failures++;
            }
        }
    }
    o.ok = max_gap <= 1e-12 && failures == 0;
    o.detail = fmt("%d pairs, max |4e(1-e) - c^2| = %.2g, %d strictness checks, %d failures", trials, max_gap,
                   boundary_checked, failures);
    return o;
}

// 4 ------------------------------------------------------------------------

TotalFunction random_nonconstant(size_t n, std::mt19937_64 &rng) {
    for (;;) {
        std::vector<uint8_t> table(size_t{1} << n);
        for (auto &v : table) {
            v = static_cast<uint8_t>(rng() & 1);
        }
        TotalFunction f = TotalFunction::from_table(n, table);
        if (!f.relevant_variables().empty()) {
            return f;
        }
    }
}

struct Triple {
    QueryState psi;
    Measurement meas;
    TotalFunction f;
};

// The exact parity algorithm on a random subset S of the n variables, with the
// state slightly perturbed and the answer flipped with probability q.
Triple noisy_subset_parity(size_t n, std::mt19937_64 &rng) {
    std::vector<uint32_t> vars;
    while (vars.empty()) {
        for (uint32_t j = 1; j <= n; j++) {
            if (rng() & 1) {
                vars.push_back(j);
            }
        }
    }
    NonadaptiveAlgorithm alg = build_parity_algorithm(vars.size());
    auto remap = [&](const IndexTuple &t) {
        std::vector<uint32_t> out;
        for (uint32_t i : t.indices()) {
            out.push_back(i == 0 ? 0 : vars[i - 1]);
        }
        return IndexTuple(out);
    };

    QueryState psi(n, alg.psi.k());
    std::vector<BasisLabel> basis;
    double delta = uniform01(rng) < 0.5 ? 0.0 : 0.3 * uniform01(rng);
    for (const auto &[label, amp] : alg.psi.entries()) {
        IndexTuple t = remap(label.tuple);
        psi.add(t, amp + delta * Amplitude(standard_normal(rng), standard_normal(rng)));
        basis.push_back(BasisLabel{t, 0});
    }
    psi.normalize();
    std::sort(basis.begin(), basis.end());

    auto dim = static_cast<Eigen::Index>(basis.size());
    auto position = [&](const IndexTuple &t) {
        return static_cast<Eigen::Index>(std::lower_bound(basis.begin(), basis.end(), BasisLabel{t, 0}) - basis.begin());
    };
    Eigen::MatrixXcd m0 = Eigen::MatrixXcd::Zero(dim, dim);
    Measurement answers = alg.output_measurement();
    for (const auto &e : answers.projective_elements()) {
        if (e.outcome != "0") {
            continue;
        }
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        for (const auto &[label, amp] : e.state.entries()) {
            v(position(remap(label.tuple))) = amp;
        }
        m0 += v * v.adjoint();
    }
    double q = 0.5 * uniform01(rng);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd noisy = (1 - q) * m0 + q * (id - m0);
    Measurement meas = Measurement::povm(n, psi.k(), 1, basis, {{"0", noisy}, {"1", id - noisy}});

    std::vector<uint8_t> table(size_t{1} << n);
    for (uint64_t v = 0; v < table.size(); v++) {
        uint8_t bit = 0;
        for (uint32_t j : vars) {
            bit ^= static_cast<uint8_t>((v >> (j - 1)) & 1);
        }
        table[v] = bit;
    }
    return Triple{std::move(psi), std::move(meas), TotalFunction::from_table(n, table)};
}

Triple random_triple(size_t n, std::mt19937_64 &rng) {
    size_t k = 1 + uniform_below(rng, 3);
    size_t full = static_cast<size_t>(std::pow(n + 1, k));
    QueryState psi = random_state(n, k, 1, 1 + uniform_below(rng, std::min<size_t>(full, 40)), rng);
    Measurement meas = random_two_outcome_povm(psi, support_basis(psi), rng);
    return Triple{std::move(psi), std::move(meas), random_nonconstant(n, rng)};
}

Outcome soundness_sandwich() {
    Outcome o;
    auto rng = make_stream(2026, "acceptance/sandwich");
    const int trials = 1000;
    int floor_violations = 0;
    int query_violations = 0;
    int nontrivial = 0;
    double min_query_slack = 1e300;
    for (int trial = 0; trial < trials; trial++) {
        size_t n = 1 + uniform_below(rng, 5);
        Triple t = trial % 2 == 0 ? random_triple(n, rng) : noisy_subset_parity(n, rng);
        double wce = worst_case_error(t.psi, t.meas, t.f);
        double floor = epsilon_lower_bound(t.psi, t.f);
        size_t n_eff = t.f.relevant_variables().size();
        double rhs = theorem1_min_queries(n_eff, std::min(wce, 0.5));
        if (wce < floor - 1e-9) {
            floor_violations++;
        }
        double slack = static_cast<double>(t.psi.k()) - rhs;
        min_query_slack = std::min(min_query_slack, slack);
        if (slack < -1e-9) {
            query_violations++;
        }
        if (wce < 0.5) {
            nontrivial++;
        }
    }
    o.ok = floor_violations == 0 && query_violations == 0;
    o.detail = fmt("%d triples (%d with wce < 1/2), floor violations %d, query violations %d, min k - rhs = %.3g",
                   trials, nontrivial, floor_violations, query_violations, min_query_slack);
    return o;
}

// 5 ------------------------------------------------------------------------

Outcome vandam() {
    Outcome o;
    double max_gap = 0;
    size_t evaluations = 0;
    bool monotone = true;
    for (size_t n = 1; n <= 12; n++) {
        std::vector<double> previous(size_t{1} << n, -1);
        for (size_t k = 0; k <= n; k++) {
            double expected = static_cast<double>(oracle::binomial_prefix(n, k)) / std::ldexp(1.0, static_cast<int>(n));
            for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
                OracleString x = OracleString::from_index(v, n);
                double p = vandam_outcome_distribution(n, k, x).probability_of(x);
                max_gap = std::max(max_gap, std::abs(p - expected));
                monotone = monotone && p >= previous[v] - 1e-12;
                previous[v] = p;
                evaluations++;
            }
        }
    }
    OracleString x = OracleString::from_string("1011");
    double example = vandam_outcome_distribution(4, 3, x).probability_of(x);
    o.ok = max_gap <= 1e-9 && monotone && std::abs(example - 15.0 / 16) <= 1e-9;
    o.detail = fmt("all n<=12, k<=n, every x (%zu runs), max gap %.2g, monotone %s, n=4 k=3 -> %.6f", evaluations,
                   max_gap, monotone ? "yes" : "no", example);
    return o;
}

// 6 ------------------------------------------------------------------------

Outcome bv_end_to_end() {
    Outcome o;
    std::ostringstream detail;
    for (size_t b : {2, 3}) {
        BvInstance inst = build_bv_instance(b);
        SuccessRange success = learning_success(inst.learner, inst.concepts);
        PipelineResult result = theorem2_pipeline(inst.learner, inst.concepts, PipelineConfig{0.0, b, 64});
        bool decodes = true;
        for (size_t i = 0; i < inst.concepts.m(); i++) {
            CountingOracle oracle(inst.concepts[i]);
            decodes = decodes && classical_learn(result.plan, oracle).concept_index == i;
        }
        std::vector<std::string> rows;
        for (const auto &c : inst.concepts.concepts()) {
            rows.push_back(c.str());
        }
        size_t brute = oracle::brute_min_distinguishing(rows).size();
        size_t exact = min_distinguishing_set(inst.concepts, SearchMode::kExact).size();
        size_t size = result.plan.base_queries().size();
        bool ok = success.min >= 1 - 1e-12 && inst.learner.queries() == 1 && size <= 4 * b && decodes &&
                  brute == b && exact == b;
        o.ok = o.ok && ok;
        detail << "b=" << b << ": success " << success.min << ", plan " << size << " <= " << 4 * b
               << ", decodes " << (decodes ? "all" : "NOT all") << ", min set " << brute << "; ";
    }
    o.detail = detail.str();
    return o;
}

// 7 ------------------------------------------------------------------------

Outcome sampling_union_bound() {
    Outcome o;
    BvInstance inst = build_bv_instance(2);
    AmplitudeProfile p = AmplitudeProfile::uniform(inst.concepts.n());
    const double eps = 0.1;
    const size_t draws = 20;
    const int trials = 1000;
    int failures = 0;
    for (int seed = 0; seed < trials; seed++) {
        if (!lemma3_sample(p, inst.concepts, draws, static_cast<uint64_t>(seed)).distinguishing) {
            failures++;
        }
    }
    double bound = lemma3_failure_bound(inst.concepts.m(), eps, draws);
    double sigma = std::sqrt(bound * (1 - bound) / trials);
    double rate = static_cast<double>(failures) / trials;
    o.ok = rate <= bound + 3 * sigma;
    o.detail = fmt("failure rate %.4f <= %.4f + 3 * %.4f", rate, bound, sigma);
    return o;
}

// 8 ------------------------------------------------------------------------

Outcome tensor_simulation() {
    Outcome o;
    auto rng = make_stream(2026, "acceptance/tensor");
    int mismatches = 0;
    int over_budget = 0;
    int copy_failures = 0;
    const int trials = 10000;
    for (int trial = 0; trial < trials; trial++) {
        size_t n = 1 + uniform_below(rng, 10);
        size_t k = 1 + uniform_below(rng, 5);
        OracleString x = OracleString::from_index(uniform_below(rng, uint64_t{1} << n), n);
        std::vector<uint32_t> idx(k);
        for (auto &i : idx) {
            i = static_cast<uint32_t>(uniform_below(rng, n + 1));
        }
        IndexTuple t(idx);
        CountingOracle oracle(x);
        if (simulate_tensor_query(t, oracle) != tensor_bit(x, t)) {
            mismatches++;
        }
        if (oracle.queries() > k) {
            over_budget++;
        }
        for (size_t j = 1; j <= n; j++) {
            std::vector<uint32_t> copy(k, 0);
            copy[0] = static_cast<uint32_t>(j);
            if (tensor_bit(x, IndexTuple(copy)) != x[j]) {
                copy_failures++;
            }
        }
    }
    o.ok = mismatches == 0 && over_budget == 0 && copy_failures == 0;
    o.detail = fmt("%d pairs, mismatches %d, cost > k %d, embedded-copy failures %d", trials, mismatches,
                   over_budget, copy_failures);
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "parity tightness", 10, parity_tightness},
        {2, "counting inequality", 30, counting_inequality},
        {3, "Helstrom tightness", 5, helstrom_tightness},
        {4, "soundness sandwich", 60, soundness_sandwich},
        {5, "van Dam recovery", 60, vandam},
        {6, "BV end-to-end", 10, bv_end_to_end},
        {7, "sampling union bound", 5, sampling_union_bound},
        {8, "tensor query simulation", 5, tensor_simulation},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = Outcome{false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.time_limit_s;
        bool ok = out.ok && in_time;
        failed += ok ? 0 : 1;
        std::printf("[%s] %d %s: %s (%.2f s, limit %.0f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    out.detail.c_str(), seconds, c.time_limit_s, in_time ? "" : ", EXCEEDED");
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

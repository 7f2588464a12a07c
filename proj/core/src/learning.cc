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

#include "nonadapt/learning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "nonadapt/errors.h"
#include "nonadapt/random.h"

namespace nonadapt {

namespace {

std::string restriction(const OracleString &x, std::span<const size_t> indices) {
    std::string pattern(indices.size(), '0');
    for (size_t p = 0; p < indices.size(); p++) {
        pattern[p] = static_cast<char>('0' + x[indices[p]]);
    }
    return pattern;
}

void check_indices(const ConceptClass &concepts, std::span<const size_t> indices) {
    for (size_t i : indices) {
        require(i >= 1 && i <= concepts.n(),
                "index " + std::to_string(i) + " outside [1, " + std::to_string(concepts.n()) + "]");
    }
}

/// Index drawn with probability weights[i] / sum(weights).
size_t draw_index(const std::vector<double> &cumulative, std::mt19937_64 &rng) {
    double u = uniform01(rng) * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        --it;
    }
    return static_cast<size_t>(it - cumulative.begin());
}

std::vector<double> cumulative_of(const std::vector<double> &weights) {
    std::vector<double> c(weights.size());
    double run = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        run += weights[i];
        c[i] = run;
    }
    return c;
}

/// bits[c][t]: bit of concept c of the tensor class at profile position t.
std::vector<std::vector<uint8_t>> tensor_bits(const TupleProfile &p, const ConceptClass &concepts) {
    std::vector<std::vector<uint8_t>> bits(concepts.m(), std::vector<uint8_t>(p.weights.size()));
    for (size_t c = 0; c < concepts.m(); c++) {
        for (size_t t = 0; t < p.weights.size(); t++) {
            bits[c][t] = tensor_bit(concepts[c], p.weights[t].first);
        }
    }
    return bits;
}

}  // namespace

bool is_distinguishing(const ConceptClass &concepts, std::span<const size_t> indices) {
    check_indices(concepts, indices);
    std::set<std::string> seen;
    for (const auto &x : concepts.concepts()) {
        if (!seen.insert(restriction(x, indices)).second) {
            return false;
        }
    }
    return true;
}

bool is_distinguishing_tuples(const ConceptClass &concepts, std::span<const IndexTuple> positions) {
    std::set<std::string> seen;
    for (const auto &x : concepts.concepts()) {
        std::string pattern(positions.size(), '0');
        for (size_t p = 0; p < positions.size(); p++) {
            pattern[p] = static_cast<char>('0' + tensor_bit(x, positions[p]));
        }
        if (!seen.insert(pattern).second) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> min_distinguishing_set(const ConceptClass &concepts, SearchMode mode) {
    size_t n = concepts.n();
    if (mode == SearchMode::kExact) {
        require(n <= kExactSearchMaxVariables, "exact search supports n <= 24; use greedy");
        for (size_t size = 0; size <= n; size++) {
            std::vector<size_t> pick(size);
            for (size_t i = 0; i < size; i++) {
                pick[i] = i + 1;
            }
            while (true) {
                if (is_distinguishing(concepts, pick)) {
                    return pick;
                }
                // Next combination in lexicographic order.
                size_t i = size;
                while (i > 0 && pick[i - 1] == n - size + i) {
                    i--;
                }
                if (i == 0) {
                    break;
                }
                pick[i - 1]++;
                for (size_t j = i; j < size; j++) {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
        throw ValidationError("no distinguishing set exists");
    }

    std::vector<std::pair<size_t, size_t>> open;
    for (size_t a = 0; a < concepts.m(); a++) {
        for (size_t b = a + 1; b < concepts.m(); b++) {
            open.emplace_back(a, b);
        }
    }
    std::vector<size_t> chosen;
    while (!open.empty()) {
        size_t best = 0;
        size_t best_count = 0;
        for (size_t i = 1; i <= n; i++) {
            size_t count = 0;
            for (const auto &[a, b] : open) {
                count += concepts[a][i] != concepts[b][i];
            }
            if (count > best_count) {
                best = i;
                best_count = count;
            }
        }
        if (best_count == 0) {
            throw ValidationError("no distinguishing set exists");
        }
        chosen.push_back(best);
        std::erase_if(open, [&](const auto &pr) { return concepts[pr.first][best] != concepts[pr.second][best]; });
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

uint8_t tensor_bit(const OracleString &x, const IndexTuple &t) {
    t.check_range(x.n());
    uint8_t bit = 0;
    for (uint32_t i : t) {
        bit ^= x[i];
    }
    return bit;
}

TensorClass::TensorClass(ConceptClass base, size_t k) : base_(std::move(base)), k_(k) {
    require(k >= 1, "tensor power needs k >= 1");
}

size_t TensorClass::positions() const {
    size_t total = 1;
    size_t radix = base_.n() + 1;
    for (size_t r = 0; r < k_; r++) {
        if (total > std::numeric_limits<size_t>::max() / radix) {
            return std::numeric_limits<size_t>::max();
        }
        total *= radix;
    }
    return total;
}

uint8_t TensorClass::bit(size_t concept_index, const IndexTuple &t) const {
    require(concept_index < base_.m(), "concept index out of range");
    require(t.size() == k_, "tuple length does not match k");
    return tensor_bit(base_[concept_index], t);
}

IndexTuple TensorClass::position(size_t p) const {
    require(p < positions(), "position out of range");
    size_t radix = base_.n() + 1;
    std::vector<uint32_t> digits(k_);
    for (size_t r = k_; r > 0; r--) {
        digits[r - 1] = static_cast<uint32_t>(p % radix);
        p /= radix;
    }
    return IndexTuple(std::move(digits));
}

std::vector<uint8_t> TensorClass::materialize(size_t concept_index) const {
    size_t total = positions();
    require(total <= (size_t{1} << 20), "tensor concept too long to materialize");
    std::vector<uint8_t> bits(total);
    for (size_t p = 0; p < total; p++) {
        bits[p] = bit(concept_index, position(p));
    }
    return bits;
}

bool TensorClass::injective() const {
    if (positions() <= (size_t{1} << 16)) {
        std::set<std::vector<uint8_t>> seen;
        for (size_t c = 0; c < m(); c++) {
            if (!seen.insert(materialize(c)).second) {
                return false;
            }
        }
        return true;
    }
    // Positions (j, 0, ..., 0) reproduce the base concept.
    std::set<std::string> seen;
    for (size_t c = 0; c < m(); c++) {
        std::string s;
        for (size_t j = 1; j <= base_.n(); j++) {
            std::vector<uint32_t> t(k_, 0);
            t[0] = static_cast<uint32_t>(j);
            s.push_back(static_cast<char>('0' + bit(c, IndexTuple(std::move(t)))));
        }
        if (!seen.insert(s).second) {
            return false;
        }
    }
    return true;
}

TensorClass tensor_class(const ConceptClass &concepts, size_t k) {
    return TensorClass(concepts, k);
}

uint8_t CountingOracle::query(size_t i) {
    require(i >= 1 && i <= x_.n(), "membership query outside [1, n]");
    queries_++;
    return x_[i];
}

uint8_t simulate_tensor_query(const IndexTuple &t, CountingOracle &oracle) {
    t.check_range(oracle.n());
    uint8_t bit = 0;
    for (uint32_t i : t.distinct_nonzero()) {
        uint8_t v = oracle.query(i);
        if (t.multiplicity(i) % 2 == 1) {
            bit ^= v;
        }
    }
    return bit;
}

AmplitudeProfile::AmplitudeProfile(std::vector<double> p) : p_(std::move(p)) {
    if (p_.size() < 2) {
        throw ValidationError("amplitude profile needs entries for indices 0..n with n >= 1");
    }
    double total = 0;
    for (double v : p_) {
        if (!(v >= 0)) {
            throw ValidationError("amplitude profile entries must be nonnegative");
        }
        total += v;
    }
    if (std::abs(total - 1) > 1e-9) {
        throw ValidationError("amplitude profile does not sum to 1");
    }
}

AmplitudeProfile AmplitudeProfile::uniform(size_t n, bool include_zero) {
    require(n >= 1, "profile needs n >= 1");
    double count = static_cast<double>(include_zero ? n + 1 : n);
    std::vector<double> p(n + 1, 1 / count);
    if (!include_zero) {
        p[0] = 0;
    }
    return AmplitudeProfile(std::move(p));
}

AmplitudeProfile AmplitudeProfile::from_state(const QueryState &psi) {
    require(psi.k() == 1, "amplitude profiles describe one-register states");
    std::vector<double> p(psi.n() + 1, 0.0);
    for (const auto &[label, amp] : psi.entries()) {
        p[label.tuple[0]] += std::norm(amp);
    }
    return AmplitudeProfile(std::move(p));
}

TupleProfile TupleProfile::from_state(const QueryState &psi) {
    TupleProfile profile{psi.n(), psi.k(), {}};
    for (const auto &[label, amp] : psi.entries()) {
        double mass = std::norm(amp);
        if (!profile.weights.empty() && profile.weights.back().first == label.tuple) {
            profile.weights.back().second += mass;
        } else {
            profile.weights.emplace_back(label.tuple, mass);
        }
    }
    std::erase_if(profile.weights, [](const auto &w) { return w.second == 0; });
    return profile;
}

TupleProfile TupleProfile::from_amplitudes(const AmplitudeProfile &p) {
    TupleProfile profile{p.n(), 1, {}};
    for (size_t i = 0; i <= p.n(); i++) {
        if (p[i] > 0) {
            profile.weights.emplace_back(IndexTuple{static_cast<uint32_t>(i)}, p[i]);
        }
    }
    return profile;
}

std::vector<PairCheck> OverlapCheckReport::violations() const {
    std::vector<PairCheck> out;
    for (const auto &pc : pairs) {
        if (!pc.ok) {
            out.push_back(pc);
        }
    }
    return out;
}

OverlapCheckReport pairwise_overlap_check(const TupleProfile &p, const ConceptClass &concepts, double eps) {
    require(p.n == concepts.n(), "profile and concept class disagree on n");
    require(eps >= 0 && eps <= 0.5, "error level outside [0, 1/2]");
    OverlapCheckReport report;
    report.eps = eps;
    report.threshold = 4 * eps * (1 - eps);
    auto bits = tensor_bits(p, concepts);
    for (size_t a = 0; a < concepts.m(); a++) {
        for (size_t b = a + 1; b < concepts.m(); b++) {
            double sum = 0;
            for (size_t t = 0; t < p.weights.size(); t++) {
                sum += (bits[a][t] == bits[b][t] ? 1.0 : -1.0) * p.weights[t].second;
            }
            PairCheck pc{a, b, sum * sum, report.threshold - sum * sum, true};
            pc.ok = pc.lhs <= report.threshold + 1e-12;
            report.pass = report.pass && pc.ok;
            report.pairs.push_back(pc);
        }
    }
    return report;
}

OverlapCheckReport pairwise_overlap_check(const AmplitudeProfile &p, const ConceptClass &concepts, double eps) {
    require(p.n() == concepts.n(), "profile and concept class disagree on n");
    return pairwise_overlap_check(TupleProfile::from_amplitudes(p), concepts, eps);
}

double lemma3_bound(size_t m, double eps) {
    require(m >= 2, "bound needs at least two concepts");
    require(eps >= 0 && eps < 0.5, "error level outside [0, 1/2)");
    return 4 * std::log2(static_cast<double>(m)) / (1 - 2 * std::sqrt(eps * (1 - eps)));
}

double lemma3_failure_bound(size_t m, double eps, size_t draws) {
    require(eps >= 0 && eps <= 0.5, "error level outside [0, 1/2]");
    double md = static_cast<double>(m);
    return md * md * std::pow(0.5 + std::sqrt(eps * (1 - eps)), static_cast<double>(draws));
}

SampledSet lemma3_sample(const AmplitudeProfile &p, const ConceptClass &concepts, size_t k_draws, uint64_t seed) {
    require(k_draws >= 1, "need at least one draw");
    require(p.n() == concepts.n(), "profile and concept class disagree on n");
    std::mt19937_64 rng = make_stream(seed, "sample");
    std::vector<double> cumulative = cumulative_of(p.values());
    SampledSet out;
    std::set<size_t> picked;
    for (size_t d = 0; d < k_draws; d++) {
        size_t i = draw_index(cumulative, rng);
        if (i == 0) {
            out.zero_draws++;
        } else {
            picked.insert(i);
        }
    }
    out.indices.assign(picked.begin(), picked.end());
    out.distinguishing = is_distinguishing(concepts, out.indices);
    return out;
}

QueryPlan::QueryPlan(ConceptClass concepts, std::vector<size_t> base_queries)
    : concepts_(std::move(concepts)), base_queries_(std::move(base_queries)) {
    std::sort(base_queries_.begin(), base_queries_.end());
    base_queries_.erase(std::unique(base_queries_.begin(), base_queries_.end()), base_queries_.end());
    check_indices(concepts_, base_queries_);
    for (size_t c = 0; c < concepts_.m(); c++) {
        if (!decoder_.emplace(pattern_of(concepts_[c]), c).second) {
            throw ValidationError("base queries do not distinguish the concept class");
        }
    }
}

std::optional<size_t> QueryPlan::decode(const std::string &pattern) const {
    auto it = decoder_.find(pattern);
    if (it == decoder_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string QueryPlan::pattern_of(const OracleString &x) const {
    return restriction(x, base_queries_);
}

LearnOutcome classical_learn(const QueryPlan &plan, CountingOracle &oracle) {
    require(oracle.n() == plan.concepts().n(), "oracle length does not match the plan's class");
    size_t before = oracle.queries();
    std::string pattern(plan.base_queries().size(), '0');
    for (size_t p = 0; p < plan.base_queries().size(); p++) {
        pattern[p] = static_cast<char>('0' + oracle.query(plan.base_queries()[p]));
    }
    auto c = plan.decode(pattern);
    if (!c) {
        throw InputOutsideClass("observed pattern " + pattern + " matches no concept");
    }
    return LearnOutcome{*c, oracle.queries() - before};
}

namespace {

std::string describe(const OverlapCheckReport &report, const ConceptClass &concepts) {
    auto bad = report.violations();
    std::string msg = "claimed error " + std::to_string(report.eps) + " is inconsistent with the learner state: " +
                      std::to_string(bad.size()) + " concept pair(s) exceed the overlap threshold";
    if (!bad.empty()) {
        const auto &pc = bad.front();
        msg += "; first: " + concepts[pc.first].str() + " vs " + concepts[pc.second].str() +
               " (squared overlap " + std::to_string(pc.lhs) + " > " + std::to_string(report.threshold) + ")";
    }
    return msg;
}

/// Greedy cover of all concept pairs by tuples from the profile's support.
std::vector<IndexTuple> greedy_tuples(const TupleProfile &p, const ConceptClass &concepts) {
    auto bits = tensor_bits(p, concepts);
    std::vector<std::pair<size_t, size_t>> open;
    for (size_t a = 0; a < concepts.m(); a++) {
        for (size_t b = a + 1; b < concepts.m(); b++) {
            open.emplace_back(a, b);
        }
    }
    std::vector<IndexTuple> chosen;
    while (!open.empty()) {
        size_t best = p.weights.size();
        size_t best_count = 0;
        for (size_t t = 0; t < p.weights.size(); t++) {
            size_t count = 0;
            for (const auto &[a, b] : open) {
                count += bits[a][t] != bits[b][t];
            }
            bool better = count > best_count ||
                          (count == best_count && count > 0 && p.weights[t].second > p.weights[best].second);
            if (better) {
                best = t;
                best_count = count;
            }
        }
        if (best_count == 0) {
            throw ValidationError("the learner's support cannot separate every concept pair");
        }
        chosen.push_back(p.weights[best].first);
        std::erase_if(open, [&](const auto &pr) { return bits[pr.first][best] != bits[pr.second][best]; });
    }
    return chosen;
}

}  // namespace

OverlapViolation::OverlapViolation(const std::string &message, OverlapCheckReport report)
    : std::runtime_error(message), report_(std::move(report)) {
}

PipelineResult theorem2_pipeline(const NonadaptiveAlgorithm &learner,
                                 const ConceptClass &concepts,
                                 const PipelineConfig &config) {
    require(learner.psi.n() == concepts.n(), "learner and concept class disagree on n");
    require(config.eps >= 0 && config.eps < 0.5, "error level outside [0, 1/2)");
    require(config.retry_cap >= 1, "retry cap must be positive");
    size_t m = concepts.m();
    size_t k = learner.queries();

    TupleProfile profile = TupleProfile::from_state(learner.psi);
    OverlapCheckReport overlap = pairwise_overlap_check(profile, concepts, config.eps);
    if (m == 1) {
        return PipelineResult{QueryPlan(concepts, {}), overlap, m, k, config.eps, 0, 0, 0, 0, false, {}, 0};
    }
    if (!overlap.pass) {
        std::string message = describe(overlap, concepts);
        throw OverlapViolation(message, std::move(overlap));
    }

    double per_query = lemma3_bound(m, config.eps);
    double bound = static_cast<double>(k) * per_query;
    auto bound_ceiling = static_cast<size_t>(std::ceil(bound - 1e-9));
    size_t draws = std::max<size_t>(1, static_cast<size_t>(std::floor(per_query + 1e-9)));

    std::vector<double> weights;
    for (const auto &[t, w] : profile.weights) {
        weights.push_back(w);
    }
    std::vector<double> cumulative = cumulative_of(weights);

    std::vector<IndexTuple> tuples;
    size_t attempts = 0;
    bool found = false;
    while (attempts < config.retry_cap && !found) {
        std::mt19937_64 rng = make_stream(config.seed, "pipeline/attempt-" + std::to_string(attempts));
        attempts++;
        std::set<IndexTuple> drawn;
        for (size_t d = 0; d < draws; d++) {
            const IndexTuple &t = profile.weights[draw_index(cumulative, rng)].first;
            if (!t.distinct_nonzero().empty()) {
                drawn.insert(t);
            }
        }
        tuples.assign(drawn.begin(), drawn.end());
        found = is_distinguishing_tuples(concepts, tuples);
    }
    bool fallback = !found;
    if (fallback) {
        tuples = greedy_tuples(profile, concepts);
    }

    std::set<size_t> base;
    for (const auto &t : tuples) {
        for (uint32_t i : t.distinct_nonzero()) {
            base.insert(i);
        }
    }
    QueryPlan plan(concepts, std::vector<size_t>(base.begin(), base.end()));
    size_t charged = k * (fallback ? tuples.size() : draws);
    return PipelineResult{std::move(plan), std::move(overlap), m,        k,        config.eps, bound,
                          bound_ceiling,   draws,              attempts, fallback, tuples,     charged};
}

}  // namespace nonadapt

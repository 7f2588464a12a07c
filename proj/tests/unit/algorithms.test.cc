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

#include "nonadapt/algorithms.h"

#include <cmath>

#include "gtest/gtest.h"
#include "nonadapt/bounds.h"
#include "nonadapt/errors.h"
#include "nonadapt/learning.h"
#include "support/oracles.h"

using namespace nonadapt;

namespace {

Distribution run_parity(const NonadaptiveAlgorithm &alg, const std::string &x) {
    return measure(apply_oracle(alg.psi, OracleString::from_string(x)), alg.output_measurement());
}

}  // namespace

TEST(build_parity_algorithm, two_bits) {
    auto alg = build_parity_algorithm(2);
    EXPECT_EQ(alg.queries(), 1u);
    EXPECT_NEAR(run_parity(alg, "01")["1"], 1.0, 1e-12);
    EXPECT_NEAR(run_parity(alg, "00")["0"], 1.0, 1e-12);
    EXPECT_NEAR(run_parity(alg, "11")["0"], 1.0, 1e-12);
}

TEST(build_parity_algorithm, three_bits_exhaustive) {
    auto alg = build_parity_algorithm(3);
    EXPECT_EQ(alg.queries(), 2u);
    for (uint64_t v = 0; v < 8; v++) {
        auto x = OracleString::from_index(v, 3);
        std::string expected = x.popcount() % 2 ? "1" : "0";
        EXPECT_NEAR(run_parity(alg, x.str())[expected], 1.0, 1e-12) << x.str();
    }
}

TEST(build_parity_algorithm, query_count_meets_bound) {
    for (size_t n = 1; n <= 10; n++) {
        auto alg = build_parity_algorithm(n);
        EXPECT_EQ(alg.queries(), (n + 1) / 2);
        EXPECT_GE(static_cast<double>(alg.queries()), theorem1_min_queries(n, 0));
        if (n % 2 == 0) {
            EXPECT_DOUBLE_EQ(static_cast<double>(alg.queries()), theorem1_min_queries(n, 0));
        }
    }
}

TEST(build_vandam_state, examples) {
    auto s = build_vandam_state(2, 1);
    double a = 1 / std::sqrt(3.0);
    EXPECT_EQ(s.support_size(), 3u);
    EXPECT_NEAR(s.amplitude({0}).real(), a, 1e-15);
    EXPECT_NEAR(s.amplitude({1}).real(), a, 1e-15);
    EXPECT_NEAR(s.amplitude({2}).real(), a, 1e-15);

    EXPECT_EQ(build_vandam_state(4, 3).support_size(), 15u);
    auto one = build_vandam_state(1, 1);
    EXPECT_NEAR(one.amplitude({0}).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(one.amplitude({1}).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(build_vandam_state(2, 3), ContractViolation);
}

TEST(build_vandam_state, support_and_encoding) {
    for (size_t n = 1; n <= 8; n++) {
        for (size_t k = 1; k <= n; k++) {
            auto s = build_vandam_state(n, k);
            EXPECT_EQ(s.support_size(), oracle::binomial_prefix(n, k));
            for (const auto &[label, amp] : s.entries()) {
                // Increasing nonzero entries, then zero padding.
                bool padding = false;
                for (size_t m = 0; m < k; m++) {
                    if (label.tuple[m] == 0) {
                        padding = true;
                    } else {
                        EXPECT_FALSE(padding);
                        if (m > 0) {
                            EXPECT_LT(label.tuple[m - 1], label.tuple[m]);
                        }
                    }
                }
            }
        }
    }
}

TEST(vandam_outcome_distribution, examples) {
    auto d = vandam_outcome_distribution(4, 3, OracleString::from_string("1011"));
    EXPECT_NEAR(d.probability_of(OracleString::from_string("1011")), 15.0 / 16.0, 1e-12);
    auto one = vandam_outcome_distribution(1, 1, OracleString::from_string("1"));
    EXPECT_NEAR(one.probability_of(OracleString::from_string("1")), 1.0, 1e-12);
    for (size_t n = 1; n <= 6; n++) {
        auto x = OracleString::from_index((uint64_t{1} << n) - 1, n);
        EXPECT_NEAR(vandam_outcome_distribution(n, n, x).probability_of(x), 1.0, 1e-12);
    }
}

TEST(vandam_outcome_distribution, fast_and_direct_paths_agree) {
    for (size_t n = 1; n <= 6; n++) {
        for (size_t k = 0; k <= n; k++) {
            for (uint64_t v = 0; v < (uint64_t{1} << n); v += 3) {
                auto x = OracleString::from_index(v, n);
                auto fast = vandam_outcome_distribution(n, k, x, FourierPath::kFast);
                auto direct = vandam_outcome_distribution(n, k, x, FourierPath::kDirect);
                for (size_t y = 0; y < fast.candidates.size(); y++) {
                    ASSERT_NEAR(fast.candidates[y], direct.candidates[y], 1e-9);
                }
                EXPECT_NEAR(fast.fail, 0.0, 1e-9);
                double expected = static_cast<double>(oracle::binomial_prefix(n, k)) / std::ldexp(1.0, int(n));
                EXPECT_NEAR(fast.probability_of(x), expected, 1e-9);
            }
        }
    }
}

TEST(vandam_closed_form, matches_binomial_sums) {
    for (size_t n = 1; n <= 16; n++) {
        for (size_t k = 0; k <= n; k++) {
            double expected = static_cast<double>(oracle::binomial_prefix(n, k)) / std::ldexp(1.0, int(n));
            EXPECT_DOUBLE_EQ(vandam_closed_form(n, k), expected);
        }
    }
    EXPECT_DOUBLE_EQ(vandam_closed_form(8, 4), 163.0 / 256.0);
}

TEST(build_vandam_state, weights_are_symmetric) {
    for (size_t n = 2; n <= 7; n++) {
        for (size_t k = 1; k <= n; k++) {
            auto profile = weight_profile(build_vandam_state(n, k));
            for (size_t j = 1; j < n; j++) {
                EXPECT_NEAR(profile.w[j], profile.w[0], 1e-12);
            }
        }
    }
}

TEST(build_bv_instance, learns_every_concept) {
    for (size_t b = 1; b <= 4; b++) {
        auto inst = build_bv_instance(b);
        EXPECT_EQ(inst.concepts.n(), (size_t{1} << b) - 1);
        EXPECT_EQ(inst.concepts.m(), size_t{1} << b);
        EXPECT_EQ(inst.learner.queries(), 1u);
        auto range = learning_success(inst.learner, inst.concepts);
        EXPECT_NEAR(range.min, 1.0, 1e-9);
    }
    EXPECT_THROW(build_bv_instance(0), ContractViolation);
    EXPECT_THROW(build_bv_instance(5), ContractViolation);
}

TEST(build_bv_instance, two_bit_examples) {
    auto inst = build_bv_instance(2);
    auto s11 = bv_concept(2, 3);
    EXPECT_EQ(s11.str(), "110");  // s.y for y = 1, 2, 3
    auto post = apply_oracle(inst.learner.psi, s11);
    EXPECT_NEAR(post.amplitude({0}).real(), 0.5, 1e-15);
    EXPECT_NEAR(post.amplitude({1}).real(), -0.5, 1e-15);
    EXPECT_NEAR(post.amplitude({2}).real(), -0.5, 1e-15);
    EXPECT_NEAR(post.amplitude({3}).real(), 0.5, 1e-15);
    EXPECT_NEAR(run_learning(inst.learner, s11)[s11.str()], 1.0, 1e-12);
    auto s00 = bv_concept(2, 0);
    EXPECT_EQ(apply_oracle(inst.learner.psi, s00), inst.learner.psi);
    EXPECT_NEAR(run_learning(inst.learner, s00)["000"], 1.0, 1e-12);
}

TEST(build_bv_instance, classical_minimum_is_b) {
    for (size_t b = 1; b <= 3; b++) {
        auto inst = build_bv_instance(b);
        std::vector<std::string> text;
        for (const auto &x : inst.concepts.concepts()) {
            text.push_back(x.str());
        }
        EXPECT_EQ(oracle::brute_min_distinguishing(text).size(), b);
    }
}

TEST(run_learning, vandam_learner_full_class) {
    auto alg = build_vandam_learner(4, 3);
    auto full = ConceptClass::full(4);
    for (const auto &x : full.concepts()) {
        auto d = run_learning(alg, x);
        EXPECT_NEAR(d[x.str()], 15.0 / 16.0, 1e-9);
        EXPECT_NEAR(d["fail"], 0.0, 1e-9);
    }
    auto range = learning_success(alg, full);
    EXPECT_NEAR(range.min, 15.0 / 16.0, 1e-9);
    EXPECT_NEAR(range.max, 15.0 / 16.0, 1e-9);
}

TEST(run_learning, single_concept_class) {
    ConceptClass one(2, {OracleString::from_string("10")});
    // The index-0 register carries no information, and none is needed.
    NonadaptiveAlgorithm trivial{"trivial", QueryState::basis(2, {0}),
                                 Measurement::projective({{"10", QueryState::basis(2, {0})}}), {}};
    EXPECT_DOUBLE_EQ(learning_success(trivial, one).min, 1.0);
    EXPECT_THROW(run_learning(trivial, OracleString(3)), ContractViolation);
}

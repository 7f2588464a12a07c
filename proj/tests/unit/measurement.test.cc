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

#include "nonadapt/measurement.h"

#include <cmath>

#include "gtest/gtest.h"
#include "nonadapt/errors.h"
#include "nonadapt/random.h"

using namespace nonadapt;

namespace {

const double h = 1 / std::sqrt(2.0);

QueryState two_level(double a1, double a2) {
    QueryState s(2, 1);
    s.add({1}, a1);
    s.add({2}, a2);
    return s;
}

Measurement computational() {
    return Measurement::projective({{"a", QueryState::basis(2, {1})}, {"b", QueryState::basis(2, {2})}});
}

}  // namespace

TEST(measure, projective_basis_state) {
    auto d = measure(QueryState::basis(2, {1}), computational());
    EXPECT_DOUBLE_EQ(d["a"], 1.0);
    EXPECT_DOUBLE_EQ(d["b"], 0.0);
}

TEST(measure, projective_equal_superposition) {
    auto d = measure(two_level(h, h), computational());
    EXPECT_NEAR(d["a"], 0.5, 1e-15);
    EXPECT_NEAR(d["b"], 0.5, 1e-15);
}

TEST(measure, plus_minus_basis_reads_phase) {
    auto pm = Measurement::projective({{"+", two_level(h, h)}, {"-", two_level(h, -h)}});
    auto d = measure(two_level(h, -h), pm);
    EXPECT_NEAR(d["+"], 0.0, 1e-15);
    EXPECT_NEAR(d["-"], 1.0, 1e-15);
}

TEST(measure, support_outside_basis_is_a_contract_violation) {
    EXPECT_THROW(measure(QueryState::basis(2, {0}), computational()), ContractViolation);
}

TEST(measure, incomplete_basis_is_rejected) {
    // Support is covered by |+> but |+> alone does not span |1>.
    auto plus_only = Measurement::projective({{"+", two_level(h, h)}});
    EXPECT_THROW(measure(QueryState::basis(2, {1}), plus_only), ContractViolation);
}

TEST(Measurement, projective_validation) {
    EXPECT_THROW(Measurement::projective({{"a", two_level(1, 1)}}), ValidationError);
    EXPECT_THROW(Measurement::projective({{"a", QueryState::basis(2, {1})}, {"b", two_level(h, h)}}),
                 ValidationError);
    EXPECT_THROW(Measurement::projective({}), ValidationError);
}

TEST(Measurement, povm_validation) {
    std::vector<BasisLabel> basis{{{1}, 0}, {{2}, 0}};
    Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
    EXPECT_NO_THROW(Measurement::povm(2, 1, 1, basis, {{"0", half}, {"1", half}}));
    EXPECT_THROW(Measurement::povm(2, 1, 1, basis, {{"0", half}}), ValidationError);
    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
    neg(0, 0) = -0.5;
    neg(1, 1) = 0.5;
    Eigen::MatrixXcd rest = Eigen::MatrixXcd::Identity(2, 2) - neg;
    EXPECT_THROW(Measurement::povm(2, 1, 1, basis, {{"0", neg}, {"1", rest}}), ValidationError);
    EXPECT_THROW(Measurement::povm(2, 1, 1, {{{1}, 0}, {{1}, 0}}, {{"0", half}, {"1", half}}), ValidationError);
    EXPECT_THROW(Measurement::povm(2, 1, 1, {{{3}, 0}, {{1}, 0}}, {{"0", half}, {"1", half}}), ValidationError);
}

TEST(measure, povm_quadratic_form) {
    std::vector<BasisLabel> basis{{{1}, 0}, {{2}, 0}};
    Eigen::MatrixXcd e0(2, 2);
    e0 << 0.5, 0.5, 0.5, 0.5;  // projector onto |+>
    Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Identity(2, 2) - e0;
    auto meas = Measurement::povm(2, 1, 1, basis, {{"+", e0}, {"-", e1}});
    auto d = measure(two_level(h, h), meas);
    EXPECT_NEAR(d["+"], 1.0, 1e-15);
    EXPECT_NEAR(d["-"], 0.0, 1e-15);
    EXPECT_THROW(measure(QueryState::basis(2, {0}), meas), ContractViolation);
}

TEST(Measurement, relabel_merges_povm_elements) {
    std::vector<BasisLabel> basis{{{1}, 0}, {{2}, 0}};
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(2, 2) / 4.0;
    auto meas = Measurement::povm(2, 1, 1, basis, {{"a", q}, {"b", q}, {"c", 2.0 * q}});
    auto merged = meas.relabeled([](const std::string &s) { return s == "c" ? std::string("y") : std::string("x"); });
    EXPECT_EQ(merged.outcomes(), (std::vector<std::string>{"x", "y"}));
    auto d = measure(QueryState::basis(2, {1}), merged);
    EXPECT_NEAR(d["x"], 0.5, 1e-15);
}

TEST(measure, random_states_and_povms_sum_to_one) {
    auto rng = make_stream(7, "measure-property");
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + uniform_below(rng, 4);
        size_t k = 1 + uniform_below(rng, 2);
        auto psi = random_state(n, k, 1 + uniform_below(rng, 2), 1 + uniform_below(rng, 8), rng);
        auto meas = random_two_outcome_povm(psi, support_basis(psi), rng);
        double total = 0;
        for (const auto &[label, p] : measure(psi, meas)) {
            EXPECT_GE(p, 0.0);
            EXPECT_LE(p, 1.0);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

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

#include "nonadapt/io.h"

#include <cmath>
#include <filesystem>

#include "gtest/gtest.h"
#include "nonadapt/algorithms.h"
#include "nonadapt/errors.h"
#include "nonadapt/random.h"

using namespace nonadapt;

TEST(parse_json, reports_position) {
    EXPECT_EQ(parse_json("{\"a\": [1, 2]}")["a"][1], 2);
    try {
        parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GE(e.column(), 8u);
    }
    EXPECT_THROW(parse_json(""), ParseError);
}

TEST(dump_json, sorted_and_stable) {
    Json j = {{"b", 0.1}, {"a", 1}};
    EXPECT_EQ(dump_json(j), "{\n  \"a\": 1,\n  \"b\": 0.1\n}\n");
    EXPECT_EQ(parse_json(dump_json(j)), j);
}

TEST(state_json, round_trip) {
    auto rng = make_stream(41, "io-state");
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + uniform_below(rng, 5);
        size_t k = 1 + uniform_below(rng, 3);
        size_t anc = 1 + uniform_below(rng, 3);
        auto psi = random_state(n, k, anc, 1 + uniform_below(rng, 6), rng);
        auto back = state_from_json(parse_json(dump_json(state_to_json(psi))));
        EXPECT_EQ(back, psi);
    }
}

TEST(state_json, rejects_bad_input) {
    EXPECT_THROW(state_from_json(parse_json("{\"n\": 2}")), ParseError);
    Json out_of_range = {{"n", 2},
                         {"k", 1},
                         {"ancilla_dim", 1},
                         {"entries", {{{"tuple", {3}}, {"a", 0}, {"re", 1.0}, {"im", 0.0}}}}};
    EXPECT_THROW(state_from_json(out_of_range), ValidationError);
}

TEST(measurement_json, round_trip) {
    auto par = build_parity_algorithm(3);
    auto back = measurement_from_json(parse_json(dump_json(measurement_to_json(par.meas))));
    EXPECT_EQ(back.outcomes(), par.meas.outcomes());
    auto x = OracleString::from_string("110");
    EXPECT_EQ(measure(apply_oracle(par.psi, x), back), measure(apply_oracle(par.psi, x), par.meas));

    auto rng = make_stream(42, "io-povm");
    for (int trial = 0; trial < 10; trial++) {
        auto psi = random_state(3, 2, 1, 5, rng);
        auto povm = random_two_outcome_povm(psi, support_basis(psi), rng);
        auto again = measurement_from_json(parse_json(dump_json(measurement_to_json(povm))));
        auto d1 = measure(psi, povm);
        auto d2 = measure(psi, again);
        for (const auto &[label, p] : d1) {
            EXPECT_NEAR(d2.at(label), p, 1e-12);
        }
    }
    EXPECT_THROW(measurement_from_json(Json{{"kind", "weak"}}), ValidationError);
}

TEST(truth_table, parse_and_format) {
    auto f = parse_truth_table("2\n0001\n");
    EXPECT_EQ(f.n(), 2u);
    EXPECT_EQ(f.at(3), 1);
    EXPECT_EQ(format_truth_table(f), "2\n0001\n");
    EXPECT_EQ(parse_truth_table("  3\n\n01101001  \n").n(), 3u);
}

TEST(truth_table, errors_carry_position) {
    try {
        parse_truth_table("2\n00x1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse_truth_table("2\n001\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_truth_table(""), ParseError);
    EXPECT_THROW(parse_truth_table("two\n0001"), ParseError);
    EXPECT_THROW(parse_truth_table("21\n0"), ParseError);
    EXPECT_THROW(parse_truth_table("1\n01\n10\n"), ParseError);
}

TEST(concept_file, parse_and_format) {
    auto c = parse_concept_class("3 2\n011\n101\n");
    EXPECT_EQ(c.m(), 2u);
    EXPECT_EQ(c[1].str(), "101");
    EXPECT_EQ(format_concept_class(c), "3 2\n011\n101\n");
    EXPECT_EQ(parse_concept_class(format_concept_class(build_bv_instance(3).concepts)).m(), 8u);
}

TEST(concept_file, errors) {
    try {
        parse_concept_class("3 2\n011\n1a1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 2u);
    }
    EXPECT_THROW(parse_concept_class("3 3\n011\n101\n"), ParseError);
    EXPECT_THROW(parse_concept_class("3\n011\n"), ParseError);
    EXPECT_THROW(parse_concept_class("3 1\n01\n"), ParseError);
    EXPECT_THROW(parse_concept_class("2 2\n01\n01\n"), ValidationError);
}

TEST(plan_json, round_trip) {
    auto bv = build_bv_instance(2);
    QueryPlan plan(bv.concepts, {1, 2});
    Json j = plan_to_json(plan);
    EXPECT_EQ(j["base_queries"], Json::array({1, 2}));
    auto back = plan_from_json(parse_json(dump_json(j)));
    EXPECT_EQ(back.base_queries(), plan.base_queries());
    EXPECT_EQ(back.decoder_table(), plan.decoder_table());

    j["decoder_table"]["00"] = 1;
    EXPECT_THROW(plan_from_json(j), ValidationError);
}

TEST(files, read_write) {
    auto dir = std::filesystem::temp_directory_path() / "nonadapt_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "x.txt").string();
    write_file(path, "abc\n");
    EXPECT_EQ(read_file(path), "abc\n");
    EXPECT_THROW(read_file((dir / "missing.txt").string()), IoError);
    std::filesystem::remove_all(dir);
}

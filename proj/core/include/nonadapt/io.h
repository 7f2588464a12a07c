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

#ifndef NONADAPT_IO_H
#define NONADAPT_IO_H

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "nonadapt/boolfn.h"
#include "nonadapt/bounds.h"
#include "nonadapt/concept_class.h"
#include "nonadapt/learning.h"
#include "nonadapt/measurement.h"
#include "nonadapt/query_state.h"

namespace nonadapt {

using Json = nlohmann::json;

/// Reads a whole file. Throws IoError.
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

/// Parses JSON text. Throws ParseError with the line and column of the fault.
Json parse_json(std::string_view text);
/// Two-space indented, keys sorted, trailing newline. Doubles are written in
/// the shortest form that reads back to the same value.
std::string dump_json(const Json &value);

// {n, k, ancilla_dim, entries: [{tuple: [...], a, re, im}]}
Json state_to_json(const QueryState &psi);
QueryState state_from_json(const Json &value);

// Projective: {kind: "projective", n, k, ancilla_dim, elements: [{outcome, state}]}
// POVM:       {kind: "povm", n, k, ancilla_dim, basis: [{tuple, a}],
//              elements: [{outcome, re: [[...]], im: [[...]]}]}
Json measurement_to_json(const Measurement &meas);
Measurement measurement_from_json(const Json &value);

/// Truth-table text: first line n, second line the 2^n table characters in
/// integer order (x_1 least significant).
TotalFunction parse_truth_table(std::string_view text);
std::string format_truth_table(const TotalFunction &f);

/// Concept-class text: first line "n m", then m lines of n characters, x_1
/// first.
ConceptClass parse_concept_class(std::string_view text);
std::string format_concept_class(const ConceptClass &concepts);

// {base_queries: [...], concepts: [...], decoder_table: {pattern: index}}
Json plan_to_json(const QueryPlan &plan);
QueryPlan plan_from_json(const Json &value);

// {n, n_eff, k, weights, eps, eps_lower_bound, theorem1_rhs, worst_case_error?, pass}
Json report_to_json(const BoundReport &report);

}  // namespace nonadapt

#endif

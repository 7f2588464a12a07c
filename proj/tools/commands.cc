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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nonadapt/algorithms.h"
#include "nonadapt/boolfn.h"
#include "nonadapt/bounds.h"
#include "nonadapt/errors.h"
#include "nonadapt/io.h"
#include "nonadapt/learning.h"
#include "nonadapt/parallel.h"
#include "nonadapt/random.h"

namespace nonadapt::cli {

namespace {

constexpr size_t kVanDamMaxN = 16;
constexpr size_t kVanDamAllInputsMaxN = 10;
constexpr size_t kVanDamSampledInputs = 32;
constexpr size_t kParityMaxN = 12;
constexpr size_t kLearnVanDamMaxN = 6;
constexpr double kMatchTolerance = 1e-9;

struct Options {
    std::optional<size_t> n;
    std::optional<size_t> k;
    std::optional<size_t> b;
    std::optional<double> eps;
    uint64_t seed = 0;
    std::vector<std::string> in;
    std::string out;
    std::string audit;
    std::string format = "json";
    std::string learner;
    std::string mode = "exact";
};

// Inputs --------------------------------------------------------------------

enum class InputKind { kState, kMeasurement, kTruthTable, kConcepts, kProfile, kPlan };

const char *kind_name(InputKind kind) {
    switch (kind) {
        case InputKind::kState:
            return "state";
        case InputKind::kMeasurement:
            return "measurement";
        case InputKind::kTruthTable:
            return "truth-table";
        case InputKind::kConcepts:
            return "concepts";
        case InputKind::kProfile:
            return "profile";
        case InputKind::kPlan:
            return "plan";
    }
    return "?";
}

struct Input {
    std::string path;
    InputKind kind = InputKind::kTruthTable;
    std::string text;
    Json json;
};

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// JSON inputs are told apart by their keys, text inputs by the header line:
// one token for a truth table, two ("n m") for a concept file.
Input load_input(const std::string &path) {
    Input in;
    in.path = path;
    in.text = read_file(path);
    size_t first = in.text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && in.text[first] == '{') {
        try {
            in.json = parse_json(in.text);
        } catch (const ParseError &e) {
            throw ParseError(path + ": " + e.what(), 0, 0);
        }
        if (in.json.contains("entries")) {
            in.kind = InputKind::kState;
        } else if (in.json.contains("kind")) {
            in.kind = InputKind::kMeasurement;
        } else if (in.json.contains("p")) {
            in.kind = InputKind::kProfile;
        } else if (in.json.contains("decoder_table")) {
            in.kind = InputKind::kPlan;
        } else {
            throw ValidationError(path + ": unrecognized JSON input (expected a state, measurement, profile or plan)");
        }
        return in;
    }
    std::istringstream lines(in.text);
    std::string header;
    while (std::getline(lines, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream tokens(header);
    size_t count = 0;
    for (std::string token; tokens >> token;) {
        count++;
    }
    in.kind = count == 2 ? InputKind::kConcepts : InputKind::kTruthTable;
    return in;
}

class Inputs {
   public:
    Inputs(const std::vector<std::string> &paths, const std::string &command, std::set<InputKind> allowed)
        : command_(command) {
        for (const auto &path : paths) {
            Input in = load_input(path);
            if (!allowed.contains(in.kind)) {
                throw ValidationError(command + " does not take a " + kind_name(in.kind) + " input (" + path + ")");
            }
            if (by_kind_.contains(in.kind)) {
                throw ValidationError(command + " got more than one " + kind_name(in.kind) + " input");
            }
            by_kind_.emplace(in.kind, std::move(in));
        }
    }

    const Input *find(InputKind kind) const {
        auto it = by_kind_.find(kind);
        return it == by_kind_.end() ? nullptr : &it->second;
    }

    const Input &need(InputKind kind) const {
        const Input *in = find(kind);
        if (in == nullptr) {
            throw ValidationError(command_ + " needs a " + kind_name(kind) + " file (--in)");
        }
        return *in;
    }

    /// Content digests, one per input kind, for run ids.
    std::string digest() const {
        std::string out;
        for (const auto &[kind, in] : by_kind_) {
            out += std::string("/") + kind_name(kind) + "=" + hex64(fnv1a(in.text)).substr(0, 8);
        }
        return out;
    }

   private:
    std::string command_;
    std::map<InputKind, Input> by_kind_;
};

template <typename Fn>
auto with_path(const Input &in, Fn &&fn) {
    try {
        return fn();
    } catch (const ParseError &e) {
        throw ParseError(in.path + ": " + e.what(), 0, 0);
    } catch (const ValidationError &e) {
        throw ValidationError(in.path + ": " + e.what());
    }
}

QueryState load_state(const Input &in) {
    return with_path(in, [&] { return state_from_json(in.json); });
}

Measurement load_measurement(const Input &in) {
    return with_path(in, [&] { return measurement_from_json(in.json); });
}

TotalFunction load_truth_table(const Input &in) {
    return with_path(in, [&] { return parse_truth_table(in.text); });
}

ConceptClass load_concepts(const Input &in) {
    return with_path(in, [&] { return parse_concept_class(in.text); });
}

AmplitudeProfile load_profile(const Input &in) {
    return with_path(in, [&] {
        try {
            return AmplitudeProfile(in.json.at("p").get<std::vector<double>>());
        } catch (const Json::exception &e) {
            throw ParseError(std::string("malformed profile: ") + e.what(), 0, 0);
        }
    });
}

// Output ---------------------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<Json> rows;
};

std::string csv_cell(const Json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string quoted = "\"";
        for (char c : s) {
            quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return quoted + "\"";
    }
    if (v.is_array()) {
        std::string joined;
        for (const auto &e : v) {
            joined += (joined.empty() ? "" : " ") + csv_cell(e);
        }
        return joined;
    }
    return v.dump();
}

std::string to_csv(const Table &table) {
    std::string out;
    for (size_t c = 0; c < table.columns.size(); c++) {
        out += (c ? "," : "") + table.columns[c];
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < table.columns.size(); c++) {
            auto it = row.find(table.columns[c]);
            out += (c ? "," : "") + (it == row.end() ? std::string() : csv_cell(*it));
        }
        out += "\n";
    }
    return out;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

void emit_record(const Options &o, const Json &record, const Table &table, const std::string &path,
                 std::ostream &out) {
    emit(o.format == "csv" ? to_csv(table) : dump_json(record), path, out);
}

Json base_record(const std::string &command, const std::string &run_id, uint64_t seed) {
    return Json{{"command", command}, {"run_id", run_id}, {"seed", seed}};
}

/// Copies run_id and seed into each table row.
Table stamped(Table table, const Json &record) {
    table.columns.insert(table.columns.begin(), {"run_id", "seed"});
    for (auto &row : table.rows) {
        row["run_id"] = record["run_id"];
        row["seed"] = record["seed"];
    }
    return table;
}

size_t need(const std::optional<size_t> &v, const char *flag, const std::string &command) {
    if (!v) {
        throw ValidationError(command + " needs " + flag);
    }
    return *v;
}

// Subcommands ----------------------------------------------------------------

int cmd_verify_bound(const Options &o, std::ostream &out) {
    Inputs inputs(o.in, "verify-bound", {InputKind::kState, InputKind::kTruthTable, InputKind::kMeasurement});
    QueryState psi = load_state(inputs.need(InputKind::kState));
    TotalFunction f = load_truth_table(inputs.need(InputKind::kTruthTable));
    std::optional<Measurement> meas;
    if (const Input *m = inputs.find(InputKind::kMeasurement)) {
        meas = load_measurement(*m);
    }
    BoundReport report = verify_bound(psi, f, meas, o.eps);

    std::string run_id = "verify-bound" + inputs.digest() + (o.eps ? "/eps=" + Json(*o.eps).dump() : "");
    Json record = base_record("verify-bound", run_id, o.seed);
    record.update(report_to_json(report));
    if (!report.worst_case_error) {
        record["worst_case_error"] = nullptr;
    }
    Table table{{"n", "n_eff", "k", "eps", "eps_lower_bound", "theorem1_rhs", "worst_case_error", "pass"}, {record}};
    emit_record(o, record, stamped(table, record), o.out, out);
    return report.pass ? kExitPass : kExitFailure;
}

std::vector<OracleString> vandam_inputs(size_t n, uint64_t seed, bool &all) {
    std::vector<OracleString> xs;
    all = n <= kVanDamAllInputsMaxN;
    if (all) {
        for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
            xs.push_back(OracleString::from_index(v, n));
        }
        return xs;
    }
    std::set<uint64_t> values{0, (uint64_t{1} << n) - 1};
    auto rng = make_stream(seed, "vandam/inputs");
    while (values.size() < kVanDamSampledInputs + 2) {
        values.insert(uniform_below(rng, uint64_t{1} << n));
    }
    for (uint64_t v : values) {
        xs.push_back(OracleString::from_index(v, n));
    }
    return xs;
}

int cmd_vandam(const Options &o, std::ostream &out) {
    size_t n = need(o.n, "--n", "vandam");
    if (n < 1 || n > kVanDamMaxN) {
        throw ValidationError("vandam supports 1 <= n <= " + std::to_string(kVanDamMaxN) + ", got n = " +
                              std::to_string(n));
    }
    std::vector<size_t> ks;
    if (o.k) {
        if (*o.k > n) {
            throw ValidationError("vandam needs k <= n");
        }
        ks.push_back(*o.k);
    } else {
        for (size_t k = 0; k <= n; k++) {
            ks.push_back(k);
        }
    }
    bool all = false;
    std::vector<OracleString> xs = vandam_inputs(n, o.seed, all);

    Json rows = Json::array();
    bool pass = true;
    double previous = -1;
    bool monotone = true;
    for (size_t k : ks) {
        std::vector<double> p(xs.size());
        parallel_for(xs.size(), [&](size_t i) { p[i] = vandam_outcome_distribution(n, k, xs[i]).probability_of(xs[i]); });
        auto [lo, hi] = std::minmax_element(p.begin(), p.end());
        double closed = vandam_closed_form(n, k);
        bool match = std::abs(*lo - closed) <= kMatchTolerance && std::abs(*hi - closed) <= kMatchTolerance;
        pass = pass && match;
        monotone = monotone && *lo >= previous - kMatchTolerance;
        previous = *lo;
        rows.push_back(Json{{"k", k}, {"success_min", *lo}, {"success_max", *hi}, {"closed_form", closed}, {"match", match}});
    }

    std::string run_id = "vandam/n=" + std::to_string(n) + (o.k ? "/k=" + std::to_string(*o.k) : "") +
                         (all ? "" : "/seed=" + std::to_string(o.seed));
    Json record = base_record("vandam", run_id, o.seed);
    record["n"] = n;
    record["inputs_checked"] = xs.size();
    record["all_inputs"] = all;
    record["rows"] = rows;
    record["monotone"] = monotone;
    record["pass"] = pass && monotone;
    Table table{{"k", "success_min", "success_max", "closed_form", "match"}, std::vector<Json>(rows.begin(), rows.end())};
    emit_record(o, record, stamped(table, record), o.out, out);
    return pass && monotone ? kExitPass : kExitFailure;
}

int cmd_parity(const Options &o, std::ostream &out) {
    size_t n = need(o.n, "--n", "parity");
    if (n < 1 || n > kParityMaxN) {
        throw ValidationError("parity supports 1 <= n <= " + std::to_string(kParityMaxN) + ", got n = " +
                              std::to_string(n));
    }
    NonadaptiveAlgorithm alg = build_parity_algorithm(n);
    TotalFunction f = build_function(FunctionKind::kParity, n);
    Measurement meas = alg.output_measurement();
    BoundReport report = verify_bound(alg.psi, f, meas);

    std::vector<double> success(size_t{1} << n);
    parallel_for(success.size(), [&](size_t v) {
        OracleString x = OracleString::from_index(v, n);
        Distribution d = measure(apply_oracle(alg.psi, x), meas);
        auto it = d.find(std::to_string(f(x)));
        success[v] = it == d.end() ? 0.0 : it->second;
    });
    auto [lo, hi] = std::minmax_element(success.begin(), success.end());
    bool pass = report.pass && *report.worst_case_error <= kMatchTolerance;

    Json record = base_record("parity", "parity/n=" + std::to_string(n), o.seed);
    record.update(Json{{"name", alg.name},
                       {"n", n},
                       {"k", alg.queries()},
                       {"success_min", *lo},
                       {"success_max", *hi},
                       {"eps_lower_bound", report.eps_lower_bound},
                       {"theorem1_rhs", report.theorem1_rhs},
                       {"worst_case_error", *report.worst_case_error},
                       {"weights", report.weights},
                       {"pass", pass}});
    Table table{{"name", "n", "k", "success_min", "success_max", "eps_lower_bound", "theorem1_rhs", "pass"}, {record}};
    emit_record(o, record, stamped(table, record), o.out, out);
    return pass ? kExitPass : kExitFailure;
}

/// Largest Helstrom error over concept pairs: no measurement on the learner's
/// state can beat it on every concept.
double learner_error_floor(const NonadaptiveAlgorithm &alg, const ConceptClass &concepts) {
    OverlapCheckReport r = pairwise_overlap_check(TupleProfile::from_state(alg.psi), concepts, 0);
    double best = 0;
    for (const auto &pc : r.pairs) {
        best = std::max(best, helstrom_error(std::sqrt(std::clamp(pc.lhs, 0.0, 1.0))));
    }
    return best;
}

/// Query lower bound for learning implied by the classical simulation: a
/// k-query learner with error eps yields a plan of size
/// 4 k log2 m / (1 - 2 sqrt(eps(1-eps))), which cannot undercut the classical
/// minimum.
double learning_query_floor(size_t classical_min, size_t m, double eps) {
    if (m < 2) {
        return 0;
    }
    double e = std::min(eps, 0.5);
    return static_cast<double>(classical_min) * (1 - 2 * std::sqrt(e * (1 - e))) / (4 * std::log2(static_cast<double>(m)));
}

int cmd_bv(const Options &o, std::ostream &out) {
    size_t b = need(o.b, "--b", "bv");
    BvInstance inst = build_bv_instance(b);
    SuccessRange success = learning_success(inst.learner, inst.concepts);
    size_t classical_min = min_distinguishing_set(inst.concepts, SearchMode::kExact).size();
    double eps = snap_error(std::max(0.0, 1 - success.min));
    double floor = learning_query_floor(classical_min, inst.concepts.m(), eps);
    bool pass = success.min >= 1 - kMatchTolerance && classical_min == b &&
                static_cast<double>(inst.learner.queries()) >= floor - kMatchTolerance;

    Json record = base_record("bv", "bv/b=" + std::to_string(b), o.seed);
    record.update(Json{{"name", inst.learner.name},
                       {"b", b},
                       {"n", inst.concepts.n()},
                       {"k", inst.learner.queries()},
                       {"m", inst.concepts.m()},
                       {"success_min", success.min},
                       {"success_max", success.max},
                       {"eps_lower_bound", learner_error_floor(inst.learner, inst.concepts)},
                       {"theorem1_rhs", nullptr},
                       {"learning_rhs", floor},
                       {"classical_min", classical_min},
                       {"pass", pass}});
    Table table{{"name", "b", "n", "k", "m", "success_min", "success_max", "eps_lower_bound", "learning_rhs",
                 "classical_min", "pass"},
                {record}};
    emit_record(o, record, stamped(table, record), o.out, out);
    return pass ? kExitPass : kExitFailure;
}

int cmd_learn(const Options &o, std::ostream &out, std::ostream &err) {
    Inputs inputs(o.in, "learn", {InputKind::kState, InputKind::kMeasurement, InputKind::kConcepts});
    std::optional<NonadaptiveAlgorithm> alg;
    std::optional<ConceptClass> concepts;
    if (const Input *c = inputs.find(InputKind::kConcepts)) {
        concepts = load_concepts(*c);
    }
    std::string run_id = "learn/learner=" + o.learner;
    if (o.learner == "bv") {
        size_t b = need(o.b, "--b", "learn --learner bv");
        BvInstance inst = build_bv_instance(b);
        alg = inst.learner;
        if (!concepts) {
            concepts = inst.concepts;
        }
        run_id += "/b=" + std::to_string(b);
    } else if (o.learner == "vandam") {
        size_t n = need(o.n, "--n", "learn --learner vandam");
        size_t k = need(o.k, "--k", "learn --learner vandam");
        if (n > kLearnVanDamMaxN) {
            throw ValidationError("learn --learner vandam supports n <= " + std::to_string(kLearnVanDamMaxN));
        }
        alg = build_vandam_learner(n, k);
        if (!concepts) {
            concepts = ConceptClass::full(n);
        }
        run_id += "/n=" + std::to_string(n) + "/k=" + std::to_string(k);
    } else if (o.learner == "file") {
        QueryState psi = load_state(inputs.need(InputKind::kState));
        Measurement meas = load_measurement(inputs.need(InputKind::kMeasurement));
        inputs.need(InputKind::kConcepts);
        alg = NonadaptiveAlgorithm{"file", std::move(psi), std::move(meas), {}};
    } else {
        throw ValidationError("unknown learner '" + o.learner + "' (expected bv, vandam or file)");
    }
    if (concepts->n() != alg->psi.n()) {
        throw ValidationError("concept length " + std::to_string(concepts->n()) + " does not match the learner's n = " +
                              std::to_string(alg->psi.n()));
    }
    run_id += inputs.digest() + (o.eps ? "/eps=" + Json(*o.eps).dump() : "") + "/seed=" + std::to_string(o.seed);

    SuccessRange success = learning_success(*alg, *concepts);
    double eps = o.eps.value_or(snap_error(std::max(0.0, 1 - success.min)));
    if (eps < 0 || eps >= 0.5) {
        throw ValidationError("learner error level must lie in [0, 1/2), got " + Json(eps).dump());
    }
    bool precondition = success.min >= 1 - eps - kMatchTolerance;
    if (!precondition) {
        err << "warning: learner succeeds with probability " << success.min << " < 1 - eps on some concept\n";
    }

    PipelineResult result = theorem2_pipeline(*alg, *concepts, PipelineConfig{eps, o.seed, 64});
    bool decoded_all = true;
    for (size_t i = 0; i < concepts->m(); i++) {
        CountingOracle oracle((*concepts)[i]);
        LearnOutcome got = classical_learn(result.plan, oracle);
        decoded_all = decoded_all && got.concept_index == i && got.queries == result.plan.base_queries().size();
    }
    Json exact_min = nullptr;
    if (concepts->n() <= kExactSearchMaxVariables) {
        exact_min = min_distinguishing_set(*concepts, SearchMode::kExact).size();
    }
    Json pairs = Json::array();
    for (const auto &pc : result.overlap.pairs) {
        pairs.push_back(Json{{"first", (*concepts)[pc.first].str()},
                             {"second", (*concepts)[pc.second].str()},
                             {"lhs", pc.lhs},
                             {"margin", pc.margin},
                             {"ok", pc.ok}});
    }
    Json tuples = Json::array();
    for (const auto &t : result.tuples) {
        tuples.push_back(t.str());
    }
    bool pass = precondition && decoded_all && result.within_bound();

    Json record = base_record("learn", run_id, o.seed);
    record.update(Json{{"learner", alg->name},
                       {"n", concepts->n()},
                       {"m", result.m},
                       {"k", result.k},
                       {"eps", result.eps},
                       {"success_min", success.min},
                       {"precondition_met", precondition},
                       {"bound", result.bound},
                       {"bound_ceiling", result.bound_ceiling},
                       {"draws_per_attempt", result.draws_per_attempt},
                       {"attempts", result.attempts},
                       {"retries", result.attempts == 0 ? 0 : result.attempts - 1},
                       {"greedy_fallback", result.greedy_fallback},
                       {"charged_queries", result.charged_queries},
                       {"tuples", tuples},
                       {"base_queries", result.plan.base_queries()},
                       {"plan_size", result.plan.base_queries().size()},
                       {"exact_minimum", exact_min},
                       {"decoded_all", decoded_all},
                       {"overlap_threshold", result.overlap.threshold},
                       {"pairs", pairs},
                       {"pass", pass}});
    if (!o.out.empty()) {
        write_file(o.out, dump_json(plan_to_json(result.plan)));
    }
    Table table{{"learner", "n", "m", "k", "eps", "bound", "bound_ceiling", "plan_size", "exact_minimum", "attempts",
                 "greedy_fallback", "decoded_all", "pass"},
                {record}};
    emit_record(o, record, stamped(table, record), o.audit, out);
    return pass ? kExitPass : kExitFailure;
}

int cmd_extract_set(const Options &o, std::ostream &out) {
    Inputs inputs(o.in, "extract-set", {InputKind::kConcepts, InputKind::kProfile, InputKind::kState});
    ConceptClass concepts = load_concepts(inputs.need(InputKind::kConcepts));
    Json record = base_record("extract-set", "", o.seed);
    std::string run_id = "extract-set/mode=" + o.mode + inputs.digest();
    std::vector<size_t> indices;
    bool distinguishing = false;
    if (o.mode == "exact" || o.mode == "greedy") {
        if (o.mode == "exact" && concepts.n() > kExactSearchMaxVariables) {
            throw ValidationError("exact search supports n <= " + std::to_string(kExactSearchMaxVariables) +
                                  "; use --mode greedy");
        }
        indices = min_distinguishing_set(concepts, o.mode == "exact" ? SearchMode::kExact : SearchMode::kGreedy);
        distinguishing = is_distinguishing(concepts, indices);
    } else if (o.mode == "sample") {
        if (concepts.m() < 2) {
            throw ValidationError("sampling needs at least two concepts");
        }
        std::optional<AmplitudeProfile> profile;
        if (const Input *p = inputs.find(InputKind::kProfile)) {
            profile = load_profile(*p);
        } else if (const Input *s = inputs.find(InputKind::kState)) {
            profile = with_path(*s, [&] { return AmplitudeProfile::from_state(load_state(*s)); });
        } else {
            profile = AmplitudeProfile::uniform(concepts.n());
        }
        if (profile->n() != concepts.n()) {
            throw ValidationError("profile covers n = " + std::to_string(profile->n()) + ", concepts have n = " +
                                  std::to_string(concepts.n()));
        }
        double eps = o.eps.value_or(0.0);
        if (eps < 0 || eps >= 0.5) {
            throw ValidationError("--eps must lie in [0, 1/2)");
        }
        size_t draws = o.k.value_or(static_cast<size_t>(std::floor(lemma3_bound(concepts.m(), eps) + 1e-9)));
        if (draws < 1) {
            throw ValidationError("--k (number of draws) must be positive");
        }
        SampledSet s = lemma3_sample(*profile, concepts, draws, o.seed);
        indices = s.indices;
        distinguishing = s.distinguishing;
        record["eps"] = eps;
        record["draws"] = draws;
        record["zero_draws"] = s.zero_draws;
        record["failure_bound"] = lemma3_failure_bound(concepts.m(), eps, draws);
        run_id += "/eps=" + Json(eps).dump() + "/draws=" + std::to_string(draws) + "/seed=" + std::to_string(o.seed);
    } else {
        throw ValidationError("unknown mode '" + o.mode + "' (expected exact, greedy or sample)");
    }
    record["run_id"] = run_id;
    record.update(Json{{"mode", o.mode},
                       {"n", concepts.n()},
                       {"m", concepts.m()},
                       {"indices", indices},
                       {"size", indices.size()},
                       {"distinguishing", distinguishing},
                       {"pass", distinguishing}});
    Table table{{"mode", "n", "m", "size", "distinguishing", "indices"}, {record}};
    emit_record(o, record, stamped(table, record), o.out, out);
    return distinguishing ? kExitPass : kExitFailure;
}

int cmd_report(const Options &o, std::ostream &out, std::ostream &err) {
    std::vector<std::string> files;
    std::vector<std::string> missing;
    for (const auto &path : o.in) {
        std::error_code ec;
        if (std::filesystem::is_directory(path, ec)) {
            std::vector<std::string> found;
            for (const auto &entry : std::filesystem::directory_iterator(path)) {
                if (entry.is_regular_file() && entry.path().extension() == ".json") {
                    found.push_back(entry.path().string());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (std::filesystem::is_regular_file(path, ec)) {
            files.push_back(path);
        } else {
            missing.push_back(path);
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto &m : missing) {
            list += "\n  " + m;
        }
        throw IoError("report inputs not found:" + list);
    }

    std::map<std::string, Json> records;
    Json warnings = Json::array();
    std::string digest;
    for (const auto &file : files) {
        std::string text = read_file(file);
        Json value;
        try {
            value = parse_json(text);
        } catch (const ParseError &e) {
            throw ParseError(file + ": " + e.what(), 0, 0);
        }
        if (!value.is_object() || !value.contains("run_id") || !value["run_id"].is_string()) {
            warnings.push_back(file + ": not a run record, skipped");
            continue;
        }
        digest += hex64(fnv1a(text));
        std::string id = value["run_id"].get<std::string>();
        if (records.contains(id)) {
            warnings.push_back("duplicate run_id " + id + ": " + file + " replaces the earlier record");
        }
        records[id] = std::move(value);
    }
    for (const auto &w : warnings) {
        err << "warning: " << w.get<std::string>() << "\n";
    }
    if (records.empty()) {
        std::string list;
        for (const auto &p : o.in) {
            list += " " + p;
        }
        throw IoError("no run records found in" + list +
                      "; expected *.json outputs of verify-bound, vandam, parity, bv, learn or extract-set");
    }

    Json merged = Json::array();
    bool all_pass = true;
    for (auto &[id, rec] : records) {
        all_pass = all_pass && rec.value("pass", true);
        merged.push_back(rec);
    }
    Json record = base_record("report", "report/" + hex64(fnv1a(digest)).substr(0, 8), o.seed);
    record.update(Json{{"count", merged.size()}, {"all_pass", all_pass}, {"records", merged}, {"warnings", warnings}});
    Table table{{"run_id", "command", "n", "k", "pass"}, std::vector<Json>(merged.begin(), merged.end())};
    emit_record(o, record, table, o.out, out);
    return all_pass ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Nonadaptive quantum query bounds: simulation, bound checks and classical plan extraction."};
    app.name("nonadapt");
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", o.seed, "Run seed (default 0)");
        sub->add_option("--out", o.out, "Write the record to this file instead of stdout");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto *verify = app.add_subcommand("verify-bound", "Check a state (and measurement) against a truth table");
    verify->add_option("--in", o.in, "State, truth-table and optional measurement files")->required();
    verify->add_option("--eps", o.eps, "Claimed worst-case error");
    common(verify);

    auto *vandam = app.add_subcommand("vandam", "Van Dam recovery probability against N_k / 2^n");
    vandam->add_option("--n", o.n, "Input length")->required();
    vandam->add_option("--k", o.k, "Query count (default: sweep 0..n)");
    common(vandam);

    auto *parity = app.add_subcommand("parity", "Parity with ceil(n/2) nonadaptive queries");
    parity->add_option("--n", o.n, "Input length")->required();
    common(parity);

    auto *bv = app.add_subcommand("bv", "One-query Bernstein-Vazirani learner");
    bv->add_option("--b", o.b, "Hidden string length (1..4)")->required();
    common(bv);

    auto *learn = app.add_subcommand("learn", "Turn a quantum learner into a certain classical plan");
    learn->add_option("--learner", o.learner, "bv, vandam or file")->required();
    learn->add_option("--b", o.b, "BV hidden string length");
    learn->add_option("--n", o.n, "Input length (vandam)");
    learn->add_option("--k", o.k, "Query count (vandam)");
    learn->add_option("--eps", o.eps, "Claimed learner error (default: measured)");
    learn->add_option("--in", o.in, "Concept file; state and measurement for --learner file");
    learn->add_option("--audit", o.audit, "Write the audit record here instead of stdout");
    common(learn);
    learn->get_option("--out")->description("Write the plan to this file");

    auto *extract = app.add_subcommand("extract-set", "Distinguishing set of a concept class");
    extract->add_option("--in", o.in, "Concept file; optional profile or one-register state")->required();
    extract->add_option("--mode", o.mode, "exact, greedy or sample")
        ->check(CLI::IsMember({"exact", "greedy", "sample"}));
    extract->add_option("--eps", o.eps, "Error level for the default draw count (sample)");
    extract->add_option("--k", o.k, "Number of draws (sample)");
    common(extract);

    auto *report = app.add_subcommand("report", "Merge run records into one document");
    report->add_option("--in", o.in, "Record files or directories")->required();
    common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitValidation;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify_bound(o, out);
        }
        if (vandam->parsed()) {
            return cmd_vandam(o, out);
        }
        if (parity->parsed()) {
            return cmd_parity(o, out);
        }
        if (bv->parsed()) {
            return cmd_bv(o, out);
        }
        if (learn->parsed()) {
            return cmd_learn(o, out, err);
        }
        if (extract->parsed()) {
            return cmd_extract_set(o, out);
        }
        return cmd_report(o, out, err);
    } catch (const OverlapViolation &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const InputOutsideClass &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ContractViolation &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace nonadapt::cli

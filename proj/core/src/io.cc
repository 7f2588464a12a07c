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

#include <fstream>
#include <sstream>

#include "nonadapt/errors.h"

namespace nonadapt {

namespace {

std::pair<size_t, size_t> line_column(std::string_view text, size_t byte) {
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i < text.size() && i + 1 < byte; i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

/// Non-empty lines with their 1-based line numbers, trailing '\r' and
/// surrounding blanks removed.
std::vector<std::pair<size_t, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<size_t, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        number++;
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            continue;
        }
        size_t e = line.find_last_not_of(" \t\r");
        out.emplace_back(number, line.substr(b, e - b + 1));
    }
    return out;
}

size_t parse_count(const std::string &token, size_t line, const char *what) {
    size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != token.size() || token.empty() || token[0] == '-') {
        throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line, 1);
    }
    return static_cast<size_t>(v);
}

OracleString parse_bits(const std::string &text, size_t line) {
    for (size_t c = 0; c < text.size(); c++) {
        if (text[c] != '0' && text[c] != '1') {
            throw ParseError("expected '0' or '1', got '" + std::string(1, text[c]) + "'", line, c + 1);
        }
    }
    return OracleString::from_string(text);
}

template <typename Fn>
auto structured(const char *what, Fn &&fn) {
    try {
        return fn();
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what(), 0, 0);
    } catch (const ContractViolation &e) {
        throw ValidationError(std::string("invalid ") + what + ": " + e.what());
    }
}

IndexTuple tuple_from_json(const Json &value) {
    return IndexTuple(value.get<std::vector<uint32_t>>());
}

Json tuple_to_json(const IndexTuple &t) {
    return Json(t.indices());
}

}  // namespace

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << contents;
    if (!out) {
        throw IoError("failed writing " + path);
    }
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte);
        std::string what = e.what();
        auto colon = what.rfind(": ");
        throw ParseError("invalid JSON: " + (colon == std::string::npos ? what : what.substr(colon + 2)), line,
                         column);
    }
}

std::string dump_json(const Json &value) {
    return value.dump(2) + "\n";
}

Json state_to_json(const QueryState &psi) {
    Json entries = Json::array();
    for (const auto &[label, amp] : psi.entries()) {
        entries.push_back(
            Json{{"tuple", tuple_to_json(label.tuple)}, {"a", label.ancilla}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return Json{{"n", psi.n()}, {"k", psi.k()}, {"ancilla_dim", psi.ancilla_dim()}, {"entries", entries}};
}

QueryState state_from_json(const Json &value) {
    return structured("state", [&]() {
        QueryState psi(value.at("n").get<size_t>(), value.at("k").get<size_t>(),
                       value.value("ancilla_dim", size_t{1}));
        for (const auto &e : value.at("entries")) {
            psi.add(tuple_from_json(e.at("tuple")), Amplitude(e.at("re").get<double>(), e.value("im", 0.0)),
                    e.value("a", uint32_t{0}));
        }
        return psi;
    });
}

Json measurement_to_json(const Measurement &meas) {
    Json out{{"n", meas.n()}, {"k", meas.k()}, {"ancilla_dim", meas.ancilla_dim()}};
    Json elements = Json::array();
    if (meas.kind() == Measurement::Kind::kProjective) {
        out["kind"] = "projective";
        for (const auto &e : meas.projective_elements()) {
            elements.push_back(Json{{"outcome", e.outcome}, {"state", state_to_json(e.state)}});
        }
    } else {
        out["kind"] = "povm";
        Json basis = Json::array();
        for (const auto &label : meas.povm_basis()) {
            basis.push_back(Json{{"tuple", tuple_to_json(label.tuple)}, {"a", label.ancilla}});
        }
        out["basis"] = basis;
        for (const auto &e : meas.povm_elements()) {
            Json re = Json::array();
            Json im = Json::array();
            for (Eigen::Index r = 0; r < e.matrix.rows(); r++) {
                std::vector<double> rr;
                std::vector<double> ii;
                for (Eigen::Index c = 0; c < e.matrix.cols(); c++) {
                    rr.push_back(e.matrix(r, c).real());
                    ii.push_back(e.matrix(r, c).imag());
                }
                re.push_back(rr);
                im.push_back(ii);
            }
            elements.push_back(Json{{"outcome", e.outcome}, {"re", re}, {"im", im}});
        }
    }
    out["elements"] = elements;
    return out;
}

Measurement measurement_from_json(const Json &value) {
    return structured("measurement", [&]() {
        std::string kind = value.at("kind").get<std::string>();
        if (kind == "projective") {
            std::vector<ProjectiveElement> elements;
            for (const auto &e : value.at("elements")) {
                elements.push_back(ProjectiveElement{e.at("outcome").get<std::string>(), state_from_json(e.at("state"))});
            }
            return Measurement::projective(std::move(elements));
        }
        if (kind != "povm") {
            throw ValidationError("unknown measurement kind '" + kind + "'");
        }
        std::vector<BasisLabel> basis;
        for (const auto &b : value.at("basis")) {
            basis.push_back(BasisLabel{tuple_from_json(b.at("tuple")), b.value("a", uint32_t{0})});
        }
        auto dim = static_cast<Eigen::Index>(basis.size());
        std::vector<PovmElement> elements;
        for (const auto &e : value.at("elements")) {
            const Json &re = e.at("re");
            const Json &im = e.at("im");
            if (re.size() != static_cast<size_t>(dim) || im.size() != static_cast<size_t>(dim)) {
                throw ValidationError("POVM element matrix has the wrong number of rows");
            }
            Eigen::MatrixXcd mat(dim, dim);
            for (Eigen::Index r = 0; r < dim; r++) {
                auto ur = static_cast<size_t>(r);
                if (re[ur].size() != static_cast<size_t>(dim) || im[ur].size() != static_cast<size_t>(dim)) {
                    throw ValidationError("POVM element matrix has the wrong number of columns");
                }
                for (Eigen::Index c = 0; c < dim; c++) {
                    auto uc = static_cast<size_t>(c);
                    mat(r, c) = std::complex<double>(re[ur][uc].get<double>(), im[ur][uc].get<double>());
                }
            }
            elements.push_back(PovmElement{e.at("outcome").get<std::string>(), std::move(mat)});
        }
        return Measurement::povm(value.at("n").get<size_t>(), value.at("k").get<size_t>(),
                                 value.value("ancilla_dim", size_t{1}), std::move(basis), std::move(elements));
    });
}

TotalFunction parse_truth_table(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("truth table is empty", 1, 1);
    }
    size_t n = parse_count(lines[0].second, lines[0].first, "variable count n");
    if (n < 1 || n > TotalFunction::kMaxVariables) {
        throw ParseError("n must lie in [1, 20]", lines[0].first, 1);
    }
    if (lines.size() < 2) {
        throw ParseError("missing truth-table row", lines[0].first + 1, 1);
    }
    if (lines.size() > 2) {
        throw ParseError("unexpected content after the truth-table row", lines[2].first, 1);
    }
    const auto &[line, row] = lines[1];
    std::vector<uint8_t> table(row.size());
    for (size_t c = 0; c < row.size(); c++) {
        if (row[c] != '0' && row[c] != '1') {
            throw ParseError("expected '0' or '1', got '" + std::string(1, row[c]) + "'", line, c + 1);
        }
        table[c] = static_cast<uint8_t>(row[c] - '0');
    }
    if (table.size() != (size_t{1} << n)) {
        throw ParseError("expected " + std::to_string(size_t{1} << n) + " table entries, got " +
                             std::to_string(table.size()),
                         line, std::min(table.size(), size_t{1} << n) + 1);
    }
    return TotalFunction::from_table(n, std::move(table));
}

std::string format_truth_table(const TotalFunction &f) {
    std::string row;
    for (uint8_t v : f.table()) {
        row.push_back(static_cast<char>('0' + v));
    }
    return std::to_string(f.n()) + "\n" + row + "\n";
}

ConceptClass parse_concept_class(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("concept file is empty", 1, 1);
    }
    std::istringstream header(lines[0].second);
    std::string n_token;
    std::string m_token;
    std::string extra;
    header >> n_token >> m_token >> extra;
    if (m_token.empty() || !extra.empty()) {
        throw ParseError("header must be \"n m\"", lines[0].first, 1);
    }
    size_t n = parse_count(n_token, lines[0].first, "bit count n");
    size_t m = parse_count(m_token, lines[0].first, "concept count m");
    if (n < 1) {
        throw ParseError("n must be positive", lines[0].first, 1);
    }
    if (lines.size() - 1 != m) {
        throw ParseError("header declares " + std::to_string(m) + " concepts, file has " +
                             std::to_string(lines.size() - 1),
                         lines.size() > m + 1 ? lines[m + 1].first : lines.back().first + 1, 1);
    }
    std::vector<OracleString> concepts;
    for (size_t i = 1; i < lines.size(); i++) {
        const auto &[line, row] = lines[i];
        if (row.size() != n) {
            throw ParseError("concept has " + std::to_string(row.size()) + " bits, expected " + std::to_string(n),
                             line, 1);
        }
        concepts.push_back(parse_bits(row, line));
    }
    return ConceptClass(n, std::move(concepts));
}

std::string format_concept_class(const ConceptClass &concepts) {
    std::string out = std::to_string(concepts.n()) + " " + std::to_string(concepts.m()) + "\n";
    for (const auto &x : concepts.concepts()) {
        out += x.str() + "\n";
    }
    return out;
}

Json plan_to_json(const QueryPlan &plan) {
    Json concepts = Json::array();
    for (const auto &x : plan.concepts().concepts()) {
        concepts.push_back(x.str());
    }
    Json table = Json::object();
    for (const auto &[pattern, index] : plan.decoder_table()) {
        table[pattern] = index;
    }
    return Json{{"base_queries", plan.base_queries()}, {"concepts", concepts}, {"decoder_table", table}};
}

QueryPlan plan_from_json(const Json &value) {
    return structured("plan", [&]() {
        std::vector<OracleString> concepts;
        size_t n = 0;
        for (const auto &c : value.at("concepts")) {
            auto s = c.get<std::string>();
            concepts.push_back(parse_bits(s, 0));
            n = s.size();
        }
        QueryPlan plan(ConceptClass(n, std::move(concepts)), value.at("base_queries").get<std::vector<size_t>>());
        std::map<std::string, size_t> table;
        for (const auto &[pattern, index] : value.at("decoder_table").items()) {
            table[pattern] = index.get<size_t>();
        }
        if (table != plan.decoder_table()) {
            throw ValidationError("decoder table does not match the concepts' restrictions");
        }
        return plan;
    });
}

Json report_to_json(const BoundReport &report) {
    Json out{{"n", report.n},
             {"n_eff", report.n_eff},
             {"k", report.k},
             {"weights", report.weights},
             {"eps", report.eps},
             {"eps_lower_bound", report.eps_lower_bound},
             {"theorem1_rhs", report.theorem1_rhs},
             {"pass", report.pass}};
    if (report.worst_case_error) {
        out["worst_case_error"] = *report.worst_case_error;
    }
    return out;
}

}  // namespace nonadapt

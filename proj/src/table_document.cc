// Copyright 2026 The mubgf Authors
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

#include "mub/table_document.h"

#include <fstream>
#include <sstream>

namespace mub {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<const char *, 8> kSeedKeys = {"a11", "b11", "a12", "b12", "a21", "b21", "a22", "b22"};

FieldElement &seed_slot(SeedParams &s, size_t k) {
    // k walks kSeedKeys: row = k / 4, column = (k / 2) % 2, a before b.
    size_t r = k / 4;
    size_t c = (k / 2) % 2;
    return (k % 2 == 0) ? s.a[r][c] : s.b[r][c];
}

FieldElement parse_literal(const json &j, const FieldCtx &field, const std::string &where) {
    if (!j.is_string()) {
        throw DocumentError(where + ": expected an element literal string");
    }
    try {
        return field.parse_element(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw DocumentError(where + ": " + e.what());
    }
}

json verdicts_to_json(const Verdicts &v) {
    json j;
    j["rows_commute"] = v.rows_commute;
    j["partition"] = v.partition;
    j["orthonormal"] = v.orthonormal;
    j["unbiased"] = v.unbiased;
    j["signature"] = {v.separable, v.entangled};
    j["valid"] = v.valid;
    j["failures"] = v.failures;
    return j;
}

Verdicts verdicts_from_json(const json &j) {
    try {
        Verdicts v;
        v.rows_commute = j.at("rows_commute").get<bool>();
        v.partition = j.at("partition").get<bool>();
        v.orthonormal = j.at("orthonormal").get<bool>();
        v.unbiased = j.at("unbiased").get<bool>();
        const json &sig = j.at("signature");
        if (!sig.is_array() || sig.size() != 2) {
            throw DocumentError("verdicts.signature: expected two integers");
        }
        v.separable = sig[0].get<int>();
        v.entangled = sig[1].get<int>();
        v.valid = j.at("valid").get<bool>();
        v.failures = j.at("failures").get<std::vector<std::string>>();
        return v;
    } catch (const json::exception &e) {
        throw DocumentError(std::string("verdicts: ") + e.what());
    }
}

}  // namespace

Verdicts Verdicts::from_report(const MubReport &report) {
    return {report.rows_commute(), report.partition, report.all_orthonormal(), report.unbiased,
            report.separable,      report.entangled, report.valid,             report.failures()};
}

TableDocument make_document(const MubTable &table, const std::optional<MubReport> &report) {
    TableDocument doc;
    doc.field = table.rows()[0][0].a.ctx().to_string();
    doc.seeds = table.seeds();
    doc.rows = table.rows();
    for (size_t r = 0; r < 5; r++) {
        for (size_t c = 0; c < 3; c++) {
            doc.operators[r][c] = point_to_operator(doc.rows[r][c]).name();
        }
    }
    if (report) {
        doc.verdicts = Verdicts::from_report(*report);
    }
    return doc;
}

json seeds_to_json(const SeedParams &seeds) {
    json j = json::object();
    SeedParams copy = seeds;
    for (size_t k = 0; k < kSeedKeys.size(); k++) {
        j[kSeedKeys[k]] = seed_slot(copy, k).to_string();
    }
    return j;
}

SeedParams seeds_from_json(const json &j, const FieldCtx &field) {
    if (!j.is_object()) {
        throw DocumentError("seeds: expected an object");
    }
    SeedParams s;
    for (size_t k = 0; k < kSeedKeys.size(); k++) {
        if (!j.contains(kSeedKeys[k])) {
            throw DocumentError(std::string("seeds: missing ") + kSeedKeys[k]);
        }
        seed_slot(s, k) = parse_literal(j.at(kSeedKeys[k]), field, std::string("seeds.") + kSeedKeys[k]);
    }
    if (j.size() != kSeedKeys.size()) {
        throw DocumentError("seeds: unexpected key");
    }
    return s;
}

json to_json(const TableDocument &doc) {
    json j;
    j["field"] = doc.field;
    if (doc.seeds) {
        j["seeds"] = seeds_to_json(*doc.seeds);
    }
    json rows = json::array();
    for (const auto &row : doc.rows) {
        json jr = json::array();
        for (const auto &p : row) {
            jr.push_back({p.a.to_string(), p.b.to_string()});
        }
        rows.push_back(jr);
    }
    j["rows"] = rows;
    j["operators"] = doc.operators;
    if (doc.verdicts) {
        j["verdicts"] = verdicts_to_json(*doc.verdicts);
    }
    return j;
}

TableDocument document_from_json(const json &j) {
    if (!j.is_object()) {
        throw DocumentError("document: expected a JSON object");
    }
    TableDocument doc;
    if (!j.contains("field") || !j["field"].is_string()) {
        throw DocumentError("document: missing field descriptor");
    }
    doc.field = j["field"].get<std::string>();
    FieldCtx field = FieldCtx::gf4();
    try {
        field = FieldCtx::parse(doc.field);
    } catch (const std::invalid_argument &e) {
        throw DocumentError(std::string("field: ") + e.what());
    }
    if (field.degree() != 2) {
        throw DocumentError("field: two-qubit tables need a degree-2 field, got " + doc.field);
    }
    if (j.contains("seeds")) {
        doc.seeds = seeds_from_json(j["seeds"], field);
    }

    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 5) {
        throw DocumentError("rows: expected 5 rows");
    }
    for (size_t r = 0; r < 5; r++) {
        const json &jr = j["rows"][r];
        if (!jr.is_array() || jr.size() != 3) {
            throw DocumentError("rows[" + std::to_string(r) + "]: expected 3 points");
        }
        for (size_t c = 0; c < 3; c++) {
            const json &jp = jr[c];
            std::string where = "rows[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!jp.is_array() || jp.size() != 2) {
                throw DocumentError(where + ": expected [a, b]");
            }
            doc.rows[r][c] = {parse_literal(jp[0], field, where), parse_literal(jp[1], field, where)};
        }
    }

    for (size_t r = 0; r < 5; r++) {
        for (size_t c = 0; c < 3; c++) {
            doc.operators[r][c] = point_to_operator(doc.rows[r][c]).name();
        }
    }
    if (j.contains("operators")) {
        std::array<std::array<std::string, 3>, 5> given;
        try {
            given = j["operators"].get<std::array<std::array<std::string, 3>, 5>>();
        } catch (const json::exception &) {
            throw DocumentError("operators: expected 5 rows of 3 names");
        }
        for (size_t r = 0; r < 5; r++) {
            for (size_t c = 0; c < 3; c++) {
                if (given[r][c] != doc.operators[r][c]) {
                    throw DocumentError("operators[" + std::to_string(r) + "][" + std::to_string(c) + "]: '" +
                                        given[r][c] + "' does not match point " + doc.rows[r][c].to_string() +
                                        " (" + doc.operators[r][c] + ")");
                }
            }
        }
    }
    if (j.contains("verdicts")) {
        doc.verdicts = verdicts_from_json(j["verdicts"]);
    }
    return doc;
}

std::string serialize(const TableDocument &doc) {
    return to_json(doc).dump(2) + "\n";
}

TableDocument parse_document(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

TableDocument read_document(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DocumentError("cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

}  // namespace mub

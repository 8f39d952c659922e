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

#pragma once

// JSON persistence of a 5x3 table:
//
//   {"field": "x^2+x+1",
//    "seeds": {"a11": "u2", "b11": "u", ...},          (optional)
//    "rows": [[["u2","u"], ["1","u2"], ["u","1"]], ...],
//    "operators": [["XY", "YZ", "ZX"], ...],            (optional on input)
//    "verdicts": {...}}                                  (optional)

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mub/pauli_engine.h"
#include "mub/phase_space.h"

namespace mub {

class DocumentError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Verdicts {
    bool rows_commute = false;
    bool partition = false;
    bool orthonormal = false;
    bool unbiased = false;
    int separable = 0;
    int entangled = 0;
    bool valid = false;
    std::vector<std::string> failures;

    static Verdicts from_report(const MubReport &report);
    bool operator==(const Verdicts &o) const = default;
};

struct TableDocument {
    std::string field = "x^2+x+1";
    std::optional<SeedParams> seeds;
    std::array<Row, 5> rows;
    std::array<std::array<std::string, 3>, 5> operators;
    std::optional<Verdicts> verdicts;

    MubTable table() const {
        return MubTable(rows, seeds);
    }
    bool operator==(const TableDocument &o) const = default;
};

/// Operator names are the Hermitian words of the points.
TableDocument make_document(const MubTable &table, const std::optional<MubReport> &report = std::nullopt);

nlohmann::ordered_json to_json(const TableDocument &doc);
/// Throws DocumentError on schema violations, bad literals, or operator
/// names that disagree with the points.
TableDocument document_from_json(const nlohmann::ordered_json &j);

std::string serialize(const TableDocument &doc);
TableDocument parse_document(const std::string &text);
TableDocument read_document(const std::string &path);

/// Seeds as {"a11": ..., "b11": ..., "a12": ..., ..., "b22": ...}.
nlohmann::ordered_json seeds_to_json(const SeedParams &seeds);
SeedParams seeds_from_json(const nlohmann::ordered_json &j, const FieldCtx &field);

}  // namespace mub

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

#include <gtest/gtest.h>

#include "mub/solver.h"
#include "oracles.h"

using namespace mub;

namespace {

std::string data(const std::string &name) {
    return std::string(MUB_TEST_DATA) + "/" + name;
}

}  // namespace

TEST(TableDocument, RoundTripsEveryCatalogTable) {
    Catalog catalog = scan_all();
    std::size_t checked = 0;
    for (const auto &entry : catalog.entries) {
        for (const auto &s : entry.solutions) {
            TableDocument doc = make_document(s.table);
            ASSERT_EQ(parse_document(serialize(doc)), doc);
            checked++;
        }
    }
    for (const auto &t : catalog.distinct_valid_tables) {
        TableDocument doc = make_document(t, verify_mub(t));
        ASSERT_TRUE(doc.verdicts.has_value());
        ASSERT_EQ(parse_document(serialize(doc)), doc);
    }
    EXPECT_EQ(checked, catalog.raw_solutions);
}

TEST(TableDocument, SchemaShape) {
    TableDocument doc = make_document(build_table(oracle::example_seeds(1, 1, 2)));
    auto j = to_json(doc);
    EXPECT_EQ(j["field"], "x^2+x+1");
    EXPECT_EQ(j["seeds"]["a11"], "u2");
    EXPECT_EQ(j["seeds"]["b22"], "u");
    EXPECT_EQ(j["rows"][0][0][0], "u2");
    EXPECT_EQ(j["rows"][0][0][1], "u");
    EXPECT_EQ(j["operators"][0][0], "ZX");
    EXPECT_FALSE(j.contains("verdicts"));
}

TEST(TableDocument, ReadsTranscribedTables) {
    TableDocument standard = read_document(data("standard_set.json"));
    EXPECT_EQ(standard.table(), oracle::table_from_names(oracle::kStandardNames));
    EXPECT_FALSE(standard.seeds.has_value());

    TableDocument b = read_document(data("solution_b_printed.json"));
    EXPECT_EQ(b.operators, oracle::kSolutionBNames);
    EXPECT_EQ(canonicalize(b.table()), canonicalize(build_table(*b.seeds)));

    TableDocument c = read_document(data("solution_c_printed.json"));
    EXPECT_EQ(c.operators, oracle::kSolutionCPrintedNames);

    // Operator names are optional on input and filled from the points.
    TableDocument id = read_document(data("identity_entry.json"));
    EXPECT_EQ(id.operators[0][0], "II");
}

TEST(TableDocument, RejectsMalformedInput) {
    EXPECT_THROW(read_document(data("bad_literal.json")), DocumentError);
    EXPECT_THROW(read_document(data("missing.json")), DocumentError);
    EXPECT_THROW(parse_document("{"), DocumentError);
    EXPECT_THROW(parse_document("[]"), DocumentError);

    auto j = to_json(make_document(standard_table()));
    auto broken = j;
    broken["operators"][0][0] = "XX";
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["rows"].erase(4);
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["rows"][1][2] = {"u"};
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["field"] = "x^3+x+1";
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["field"] = "x^2+1";
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["seeds"].erase("a22");
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["seeds"]["c11"] = "0";
    EXPECT_THROW(document_from_json(broken), DocumentError);
    broken = j;
    broken["verdicts"] = {{"valid", true}};
    EXPECT_THROW(document_from_json(broken), DocumentError);
}

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

#include "mub/phase_space.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mub/solver.h"
#include "oracles.h"

using namespace mub;

namespace {

FieldCtx f = FieldCtx::gf4();
FieldElement e0 = f.zero(), e1 = f.one(), u = f.generator(), u2 = u.square();

Point pt(const char *text) {
    return parse_point(text, f);
}

std::vector<Point> all_points() {
    std::vector<Point> out;
    for (const auto &a : f.elements())
        for (const auto &b : f.elements()) out.push_back({a, b});
    return out;
}

bool all_true(const std::array<bool, 15> &rel) {
    return std::all_of(rel.begin(), rel.end(), [](bool b) { return b; });
}

}  // namespace

TEST(Point, TextForm) {
    EXPECT_EQ((Point{u2, u}).to_string(), "(u2,u)");
    EXPECT_EQ(pt("(u2,u)"), (Point{u2, u}));
    EXPECT_EQ(pt("(0,0)"), (Point{e0, e0}));
    EXPECT_THROW(pt("(u,"), std::invalid_argument);
    EXPECT_THROW(pt("u,u"), std::invalid_argument);
    EXPECT_THROW(pt("(u;u)"), std::invalid_argument);
    EXPECT_THROW(pt("(u,q)"), std::invalid_argument);
}

TEST(Commutes, Examples) {
    EXPECT_TRUE(commutes(pt("(u,0)"), pt("(u2,0)")));
    EXPECT_FALSE(commutes(pt("(u,0)"), pt("(0,u)")));
    for (const auto &q : all_points()) EXPECT_TRUE(commutes(pt("(0,0)"), q));
}

TEST(Commutes, SymmetricAndMatchesMatrixOracle) {
    for (const auto &p : all_points()) {
        for (const auto &q : all_points()) {
            EXPECT_EQ(commutes(p, q), commutes(q, p));
            oracle::Mat4 mp = oracle::word_matrix(oracle::point_word(p));
            oracle::Mat4 mq = oracle::word_matrix(oracle::point_word(q));
            bool matrix_commutes = (mp * mq - mq * mp).isZero(0);
            EXPECT_EQ(commutes(p, q), matrix_commutes) << p.to_string() << " " << q.to_string();
        }
    }
}

TEST(CompleteRow, Examples) {
    EXPECT_EQ(complete_row(pt("(u2,u)"), pt("(1,u2)")), pt("(u,1)"));
    EXPECT_EQ(complete_row(pt("(u,u)"), pt("(1,u)")), pt("(u2,0)"));
    for (const auto &p : all_points()) {
        EXPECT_TRUE(complete_row(p, p).is_zero());
        for (const auto &q : all_points()) {
            EXPECT_EQ(complete_row(p, q), complete_row(q, p));
            EXPECT_EQ(complete_row(complete_row(p, q), q), p);
        }
    }
}

TEST(BuildTable, SolutionAIsTheStandardSet) {
    MubTable table = build_table(oracle::example_seeds(1, 3, 3));
    EXPECT_EQ(oracle::row_sets(table), oracle::row_sets(oracle::table_from_names(oracle::kStandardNames)));
    EXPECT_TRUE(table.valid());
    EXPECT_EQ(canonicalize(table), canonicalize(standard_table()));
    EXPECT_EQ(oracle::row_sets(standard_table()), oracle::row_sets(oracle::table_from_names(oracle::kStandardNames)));
}

TEST(BuildTable, SolutionBMatchesPrintedTable) {
    MubTable table = build_table(oracle::example_seeds(1, 1, 2));
    MubTable printed = oracle::table_from_text(oracle::kSolutionBPoints);
    EXPECT_EQ(oracle::row_sets(table), oracle::row_sets(printed));
    EXPECT_EQ(table.at(4, 1), pt("(u2,1)"));
    std::vector<Point> row4(table.rows()[3].begin(), table.rows()[3].end());
    std::sort(row4.begin(), row4.end());
    EXPECT_EQ(row4, (std::vector<Point>{pt("(0,u)"), pt("(u2,1)"), pt("(u2,u2)")}));
    EXPECT_TRUE(table.valid());
}

TEST(BuildTable, SolutionCDiffersFromPrintedRow3) {
    MubTable table = build_table(oracle::example_seeds(2, 1, 2));
    EXPECT_EQ(table.rows()[2], (Row{pt("(1,0)"), pt("(u2,1)"), pt("(u,1)")}));
    EXPECT_TRUE(table.valid());
    MubTable printed = oracle::table_from_text(oracle::kSolutionCPrintedPoints);
    EXPECT_EQ(matching_points(table, printed), 14);
    EXPECT_FALSE(printed.row_commutes(3));
    EXPECT_FALSE(printed.partition());
}

TEST(BuildTable, DegenerateSeedsAreFlaggedNotDropped) {
    SeedParams zero;
    MubTable table = build_table(zero);
    EXPECT_TRUE(table.rows_commute());
    EXPECT_FALSE(table.partition());
    EXPECT_FALSE(table.valid());
    ASSERT_TRUE(table.seeds().has_value());

    // Equal seed points in a row give a zero third column.
    SeedParams repeated = SeedParams::from_points(pt("(u,0)"), pt("(u,0)"), pt("(0,u)"), pt("(0,u2)"));
    MubTable t2 = build_table(repeated);
    EXPECT_TRUE(t2.at(1, 3).is_zero());
    EXPECT_FALSE(partition_check(t2));
}

TEST(BuildTable, RowRuleAgainstOperatorProducts) {
    // Row r > 2, column c: O_{2,c} O_{1,c+r-3}, columns cycling through 1..3.
    MubTable table = build_table(oracle::example_seeds(1, 1, 2));
    for (int r = 3; r <= 5; r++) {
        for (int c = 1; c <= 3; c++) {
            int c1 = (c + r - 3 - 1) % 3 + 1;
            EXPECT_EQ(table.at(r, c), table.at(2, c) + table.at(1, c1));
        }
    }
}

TEST(AppendixRelations, Examples) {
    EXPECT_TRUE(all_true(appendix_relations(oracle::example_seeds(1, 3, 3))));
    EXPECT_TRUE(all_true(appendix_relations(SeedParams{})));
    SeedParams s;
    s.a[0][0] = u;
    s.b[0][1] = u;
    EXPECT_FALSE(appendix_relations(s)[0]);
}

TEST(AppendixRelations, AgreeWithRowCommutationOfBuiltTable) {
    // Relation k pairs the columns (1,2), (1,3), (2,3) of row k / 3 + 1.
    static constexpr std::array<std::array<int, 2>, 3> pairs = {{{1, 2}, {1, 3}, {2, 3}}};
    for (std::uint32_t index = 0; index < kSeedAssignments; index += 7) {
        SeedParams seeds = seed_assignment(index);
        auto rel = appendix_relations(seeds);
        MubTable table = build_table(seeds);
        for (int k = 0; k < 15; k++) {
            int r = k / 3 + 1;
            auto [c1, c2] = pairs[k % 3];
            ASSERT_EQ(rel[k], commutes(table.at(r, c1), table.at(r, c2))) << "relation " << k + 1;
        }
    }
}

TEST(Canonicalize, IdempotentAndPermutationInvariant) {
    MubTable printed = oracle::table_from_text(oracle::kSolutionBPoints);
    MubTable canon = canonicalize(printed);
    EXPECT_EQ(canonicalize(canon), canon);
    EXPECT_EQ(oracle::row_sets(canon), oracle::row_sets(printed));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        std::array<Row, 5> rows = printed.rows();
        for (auto &row : rows) std::shuffle(row.begin(), row.end(), rng);
        std::shuffle(rows.begin(), rows.end(), rng);
        EXPECT_EQ(canonicalize(MubTable(rows)), canon);
    }
    // Element order 0 < 1 < u < u2 puts (0,1) first.
    EXPECT_EQ(canon.at(1, 1), pt("(0,1)"));
}

TEST(Canonicalize, SolutionAAndStandardSetShareCanonicalForm) {
    MubTable generated = build_table(oracle::example_seeds(1, 3, 3));
    MubTable table1 = oracle::table_from_names(oracle::kStandardNames);
    EXPECT_NE(generated, table1);
    EXPECT_EQ(canonicalize(generated), canonicalize(table1));
    // Generated rows 1..5 are standard rows 4,3,2,5,1 as point sets.
    std::array<int, 5> perm = {4, 3, 2, 5, 1};
    for (int r = 0; r < 5; r++) {
        std::vector<Point> x(generated.rows()[r].begin(), generated.rows()[r].end());
        std::vector<Point> y(table1.rows()[perm[r] - 1].begin(), table1.rows()[perm[r] - 1].end());
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        EXPECT_EQ(x, y) << "row " << r + 1;
    }
}

TEST(PartitionCheck, Examples) {
    EXPECT_TRUE(partition_check(oracle::table_from_text(oracle::kSolutionBPoints)));
    EXPECT_FALSE(partition_check(oracle::table_from_text(oracle::kSolutionCPrintedPoints)));
    std::array<Row, 5> rows = oracle::table_from_names(oracle::kStandardNames).rows();
    rows[2][1] = Point{};
    EXPECT_FALSE(partition_check(MubTable(rows)));
}

TEST(SeedParams, MixedFieldsRejected) {
    SeedParams s;
    s.a[1][1] = FieldCtx(3, 0b1011).one();
    EXPECT_THROW(build_table(s), ContextMismatch);
    EXPECT_THROW(appendix_relations(s), ContextMismatch);
}

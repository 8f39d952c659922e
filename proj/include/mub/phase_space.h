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

// Discrete phase space GF(4) x GF(4) for two qubits.
//
// A point (a, b) labels the translation operator whose sigma_x exponents are
// the self-dual coordinates of a and whose sigma_z exponents are those of b.
// Multiplying operators adds their labels, so table completion is done on
// points with field addition.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mub/galois.h"

namespace mub {

struct Point {
    FieldElement a;
    FieldElement b;

    bool is_zero() const {
        return a.is_zero() && b.is_zero();
    }
    Point operator+(const Point &other) const {
        return {a + other.a, b + other.b};
    }
    /// "(a,b)", e.g. "(u2,u)".
    std::string to_string() const;

    bool operator==(const Point &other) const = default;
    auto operator<=>(const Point &other) const = default;
};

inline std::ostream &operator<<(std::ostream &out, const Point &p) {
    return out << p.to_string();
}

/// Parses "(a,b)". Throws std::invalid_argument on malformed text.
Point parse_point(std::string_view text, const FieldCtx &field);

/// Phase-space commutation predicate: tr(a1 b2) == tr(a2 b1).
bool commutes(const Point &p, const Point &q);

/// Third point of a row from its first two: the label of O_{r,1} O_{r,2}.
Point complete_row(const Point &p1, const Point &p2);

/// The eight seed symbols. a[r][c] holds a_{c+1}^{(r+1)}: the first index is
/// the table row, the second the column.
struct SeedParams {
    std::array<std::array<FieldElement, 2>, 2> a;
    std::array<std::array<FieldElement, 2>, 2> b;

    /// Seed point of row r, column c (both 1-based, r, c in {1, 2}).
    Point point(int r, int c) const {
        return {a[r - 1][c - 1], b[r - 1][c - 1]};
    }
    static SeedParams from_points(const Point &p11, const Point &p12, const Point &p21, const Point &p22);
    /// Throws ContextMismatch unless all eight symbols share one field.
    FieldCtx field() const;

    bool operator==(const SeedParams &other) const = default;
};

using Row = std::array<Point, 3>;

/// A 5x3 grid of phase-space points with its commutation and partition
/// annotations. Tables compare equal when their grids are equal; the seeds
/// that produced them are not part of the comparison.
class MubTable {
   public:
    explicit MubTable(std::array<Row, 5> rows, std::optional<SeedParams> seeds = std::nullopt);

    const std::array<Row, 5> &rows() const {
        return rows_;
    }
    /// Point in row r, column c (1-based).
    const Point &at(int r, int c) const {
        return rows_[r - 1][c - 1];
    }
    const std::optional<SeedParams> &seeds() const {
        return seeds_;
    }
    /// Every pair within row r (1-based) satisfies commutes().
    bool row_commutes(int r) const {
        return row_commutes_[r - 1];
    }
    bool rows_commute() const;
    /// The 15 entries are the 15 nonzero points, each exactly once.
    bool partition() const {
        return partition_;
    }
    bool valid() const {
        return partition_ && rows_commute();
    }

    bool operator==(const MubTable &other) const {
        return rows_ == other.rows_;
    }

   private:
    std::array<Row, 5> rows_;
    std::optional<SeedParams> seeds_;
    std::array<bool, 5> row_commutes_;
    bool partition_;
};

bool partition_check(const MubTable &table);

/// Rows 1-2 are the seed points followed by their sum. Row r in {3, 4, 5} has
/// column c equal to p_c^{(2)} + p_{s}^{(1)} with s = ((c - 1 + r - 3) mod 3) + 1.
MubTable build_table(const SeedParams &seeds);

/// Truth value of each of the 15 pairwise commutation relations of a table
/// built from `seeds`, in the order row 1 (1-2, 1-3, 2-3), row 2, ..., row 5.
/// Positions 0, 3, 6, 9 are the four relations solved for.
std::array<bool, 15> appendix_relations(const SeedParams &seeds);

/// The standard two-qubit set {ZZ, IZ, ZI}, {XX, IX, XI}, {YY, IY, YI},
/// {XY, ZX, YZ}, {YX, ZY, XZ}, built from the seeds ZZ, IZ, XX, IX.
MubTable standard_table();

/// Points sorted within each row, rows sorted lexicographically.
MubTable canonicalize(const MubTable &table);

/// Largest number of points shared between the two tables over all pairings
/// of their rows (each row compared as a set).
int matching_points(const MubTable &x, const MubTable &y);

}  // namespace mub

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

#include <algorithm>
#include <numeric>
#include <set>

namespace mub {

std::string Point::to_string() const {
    return "(" + a.to_string() + "," + b.to_string() + ")";
}

Point parse_point(std::string_view text, const FieldCtx &field) {
    auto fail = [&]() -> Point {
        throw std::invalid_argument("malformed point '" + std::string(text) + "'");
    };
    if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
        return fail();
    }
    std::string_view inner = text.substr(1, text.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
        return fail();
    }
    return {field.parse_element(inner.substr(0, comma)), field.parse_element(inner.substr(comma + 1))};
}

bool commutes(const Point &p, const Point &q) {
    return trace_bit(p.a * q.b) == trace_bit(q.a * p.b);
}

Point complete_row(const Point &p1, const Point &p2) {
    return p1 + p2;
}

SeedParams SeedParams::from_points(const Point &p11, const Point &p12, const Point &p21, const Point &p22) {
    SeedParams s;
    s.a = {{{p11.a, p12.a}, {p21.a, p22.a}}};
    s.b = {{{p11.b, p12.b}, {p21.b, p22.b}}};
    return s;
}

FieldCtx SeedParams::field() const {
    FieldCtx f = a[0][0].ctx();
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            if (a[r][c].ctx() != f || b[r][c].ctx() != f) {
                throw ContextMismatch("seed symbols belong to different fields");
            }
        }
    }
    return f;
}

MubTable::MubTable(std::array<Row, 5> rows, std::optional<SeedParams> seeds)
    : rows_(std::move(rows)), seeds_(std::move(seeds)) {
    for (size_t r = 0; r < 5; r++) {
        const Row &row = rows_[r];
        row_commutes_[r] = commutes(row[0], row[1]) && commutes(row[0], row[2]) && commutes(row[1], row[2]);
    }
    std::set<Point> seen;
    partition_ = true;
    for (const Row &row : rows_) {
        for (const Point &p : row) {
            if (p.is_zero() || !seen.insert(p).second) {
                partition_ = false;
            }
        }
    }
}

bool MubTable::rows_commute() const {
    return std::all_of(row_commutes_.begin(), row_commutes_.end(), [](bool b) { return b; });
}

bool partition_check(const MubTable &table) {
    return table.partition();
}

MubTable build_table(const SeedParams &seeds) {
    seeds.field();
    std::array<Row, 5> rows;
    for (int r = 1; r <= 2; r++) {
        Point p1 = seeds.point(r, 1);
        Point p2 = seeds.point(r, 2);
        rows[r - 1] = {p1, p2, complete_row(p1, p2)};
    }
    for (int r = 3; r <= 5; r++) {
        for (int c = 1; c <= 3; c++) {
            int shifted = (c - 1 + r - 3) % 3;
            rows[r - 1][c - 1] = rows[1][c - 1] + rows[0][shifted];
        }
    }
    return MubTable(rows, seeds);
}

std::array<bool, 15> appendix_relations(const SeedParams &seeds) {
    seeds.field();
    // aRC is the symbol of row R, column C; column 3 is the sum of columns 1 and 2.
    const auto &a = seeds.a;
    const auto &b = seeds.b;
    const FieldElement a11 = a[0][0], a12 = a[0][1], a13 = a11 + a12;
    const FieldElement b11 = b[0][0], b12 = b[0][1], b13 = b11 + b12;
    const FieldElement a21 = a[1][0], a22 = a[1][1], a23 = a21 + a22;
    const FieldElement b21 = b[1][0], b22 = b[1][1], b23 = b21 + b22;
    auto eq = [](const FieldElement &lhs, const FieldElement &rhs) { return trace_bit(lhs) == trace_bit(rhs); };

    return {
        eq(a11 * b12, a12 * b11),
        eq(a11 * (b11 + b12), b11 * (a11 + a12)),
        eq(a12 * (b11 + b12), b12 * (a11 + a12)),
        eq(a21 * b22, a22 * b21),
        eq(a21 * (b21 + b22), b21 * (a21 + a22)),
        eq(a22 * (b21 + b22), b22 * (a21 + a22)),
        eq((a11 + a21) * (b12 + b22), (a12 + a22) * (b11 + b21)),
        eq((a11 + a21) * (b13 + b23), (a13 + a23) * (b11 + b21)),
        eq((a12 + a22) * (b13 + b23), (a13 + a23) * (b12 + b22)),
        eq((a21 + a12) * (b22 + b13), (a22 + a13) * (b21 + b12)),
        eq((a21 + a12) * (b23 + b11), (a23 + a11) * (b21 + b12)),
        eq((a22 + a13) * (b23 + b11), (a23 + a11) * (b22 + b13)),
        eq((a21 + a13) * (b22 + b11), (a22 + a11) * (b21 + b13)),
        eq((a21 + a13) * (b23 + b12), (a23 + a12) * (b21 + b13)),
        // Row 5, columns 2 and 3: (a22 + a11, b22 + b11) against (a23 + a12, b23 + b12).
        eq((a22 + a11) * (b23 + b12), (a23 + a12) * (b22 + b11)),
    };
}

MubTable standard_table() {
    FieldCtx f = FieldCtx::gf4();
    FieldElement zero = f.zero(), one = f.one(), u2 = f.generator().square();
    return build_table(SeedParams::from_points({zero, one}, {zero, u2}, {one, zero}, {u2, zero}));
}

MubTable canonicalize(const MubTable &table) {
    std::array<Row, 5> rows = table.rows();
    for (Row &row : rows) {
        std::sort(row.begin(), row.end());
    }
    std::sort(rows.begin(), rows.end());
    return MubTable(rows, table.seeds());
}

int matching_points(const MubTable &x, const MubTable &y) {
    std::array<std::array<int, 5>, 5> shared{};
    for (int i = 0; i < 5; i++) {
        for (int j = 0; j < 5; j++) {
            for (const Point &p : x.rows()[i]) {
                shared[i][j] += static_cast<int>(std::count(y.rows()[j].begin(), y.rows()[j].end(), p));
            }
        }
    }
    std::array<int, 5> perm;
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int total = 0;
        for (int i = 0; i < 5; i++) {
            total += shared[i][perm[i]];
        }
        best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace mub

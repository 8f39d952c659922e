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

// Test-only reference routes. Nothing here calls into the code paths it is
// used to check: field products are long-hand carry-less products, operator
// matrices are built from literal Pauli matrices with Eigen, and the
// reference tables are transcribed as operator names.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <complex>
#include <string>
#include <vector>

#include "mub/phase_space.h"

namespace mub::oracle {

/// Carry-less product followed by long division by `poly`.
inline unsigned mulmod(unsigned x, unsigned y, unsigned poly) {
    unsigned product = 0;
    for (unsigned k = 0; k < 16; k++) {
        if (y & (1u << k)) {
            product ^= x << k;
        }
    }
    int deg = 31 - __builtin_clz(poly);
    for (int k = 31; k >= deg; k--) {
        if (product & (1u << k)) {
            product ^= poly << (k - deg);
        }
    }
    return product;
}

/// x + x^2 + ... + x^(2^(n-1)) with mulmod.
inline unsigned trace(unsigned x, unsigned n, unsigned poly) {
    unsigned sum = 0;
    unsigned conj = x;
    for (unsigned k = 0; k < n; k++) {
        sum ^= conj;
        conj = mulmod(conj, conj, poly);
    }
    return sum;
}

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline Mat2 pauli(char letter) {
    using C = std::complex<double>;
    Mat2 m;
    switch (letter) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 m;
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

/// Matrix of a two-letter word such as "XY".
inline Mat4 word_matrix(const std::string &word) {
    return kron(pauli(word[0]), pauli(word[1]));
}

/// Word of a GF(4) point, from the four anchor correspondences
/// (u,0) <-> XI, (u2,0) <-> IX, (0,u) <-> ZI, (0,u2) <-> IZ and linearity:
/// a = x1 u + x2 u2, b = z1 u + z2 u2 (bits: 0, 1, u = 2, u2 = 3).
inline std::string point_word(const Point &p) {
    // coefficient bits -> (coefficient of u, coefficient of u2): 1 = u + u2.
    static const std::array<std::array<int, 2>, 4> split = {{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    auto xs = split[p.a.bits()];
    auto zs = split[p.b.bits()];
    std::string w;
    for (int k = 0; k < 2; k++) {
        w += xs[k] ? (zs[k] ? 'Y' : 'X') : (zs[k] ? 'Z' : 'I');
    }
    return w;
}

/// Inverse of point_word.
inline Point word_point(const std::string &word) {
    FieldCtx f = FieldCtx::gf4();
    static const std::array<unsigned, 2> anchor = {2, 3};
    unsigned a = 0, b = 0;
    for (int k = 0; k < 2; k++) {
        if (word[k] == 'X' || word[k] == 'Y') a ^= anchor[k];
        if (word[k] == 'Z' || word[k] == 'Y') b ^= anchor[k];
    }
    return {f.element(a), f.element(b)};
}

using NameTable = std::array<std::array<std::string, 3>, 5>;

/// The standard set, as printed.
inline const NameTable kStandardNames = {{{"ZZ", "IZ", "ZI"},
                                   {"XX", "IX", "XI"},
                                   {"YY", "IY", "YI"},
                                   {"XY", "ZX", "YZ"},
                                   {"YX", "ZY", "XZ"}}};

using PointTextTable = std::array<std::array<std::string, 3>, 5>;

/// Solution B, points and operators as printed.
inline const PointTextTable kSolutionBPoints = {{{"(1,u2)", "(u,1)", "(u2,u)"},
                                                 {"(1,u)", "(u,u)", "(u2,0)"},
                                                 {"(0,1)", "(1,1)", "(1,0)"},
                                                 {"(0,u)", "(u2,1)", "(u2,u2)"},
                                                 {"(0,u2)", "(u,u2)", "(u,0)"}}};
inline const NameTable kSolutionBNames = {{{"XY", "YZ", "ZX"},
                                           {"YX", "YI", "IX"},
                                           {"ZZ", "YY", "XX"},
                                           {"ZI", "ZY", "IY"},
                                           {"IZ", "XZ", "XI"}}};

/// Solution C, points and operators as printed (row 3 and row 4 share (0,1)).
inline const PointTextTable kSolutionCPrintedPoints = {{{"(1,1)", "(u,u2)", "(u2,u)"},
                                                        {"(1,u)", "(u,u)", "(u2,0)"},
                                                        {"(0,1)", "(u,1)", "(u2,1)"},
                                                        {"(0,1)", "(0,u)", "(0,u2)"},
                                                        {"(1,u2)", "(u,0)", "(u2,u2)"}}};
inline const NameTable kSolutionCPrintedNames = {{{"YY", "XZ", "ZX"},
                                                  {"YX", "YI", "IX"},
                                                  {"ZZ", "YZ", "ZY"},
                                                  {"ZZ", "ZI", "IZ"},
                                                  {"XY", "XI", "IY"}}};

inline MubTable table_from_names(const NameTable &names) {
    std::array<Row, 5> rows;
    for (size_t r = 0; r < 5; r++)
        for (size_t c = 0; c < 3; c++)
            rows[r][c] = word_point(names[r][c]);
    return MubTable(rows);
}

inline MubTable table_from_text(const PointTextTable &text) {
    FieldCtx f = FieldCtx::gf4();
    std::array<Row, 5> rows;
    for (size_t r = 0; r < 5; r++)
        for (size_t c = 0; c < 3; c++)
            rows[r][c] = parse_point(text[r][c], f);
    return MubTable(rows);
}

/// Seeds for the worked fixed choice plus a triple (bits of a12, a22, b22).
inline SeedParams example_seeds(unsigned a12, unsigned a22, unsigned b22) {
    FieldCtx f = FieldCtx::gf4();
    SeedParams s;
    s.a = {{{f.element(3), f.element(a12)}, {f.element(2), f.element(a22)}}};
    s.b = {{{f.element(2), f.element(3)}, {f.element(2), f.element(b22)}}};
    return s;
}

/// Sorted set of point sets; order-insensitive comparison without canonicalize().
inline std::vector<std::vector<Point>> row_sets(const MubTable &t) {
    std::vector<std::vector<Point>> out;
    for (const auto &row : t.rows()) {
        std::vector<Point> pts(row.begin(), row.end());
        std::sort(pts.begin(), pts.end());
        out.push_back(pts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mub::oracle

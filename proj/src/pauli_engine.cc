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

#include "mub/pauli_engine.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace mub {

namespace {

using Matrix2 = std::array<std::array<GaussInt, 2>, 2>;

Matrix2 factor_matrix(const PauliFactor &f) {
    // sigma_x^x sigma_z^z
    Matrix2 m{};
    for (int col = 0; col < 2; col++) {
        int row = col ^ f.x;
        m[row][col] = {(f.z && col) ? -1 : 1, 0};
    }
    return m;
}

Matrix4 scaled(const Matrix4 &m, const GaussInt &s) {
    Matrix4 out = m;
    for (auto &row : out) {
        for (auto &v : row) {
            v = v * s;
        }
    }
    return out;
}

Matrix4 plus(const Matrix4 &x, const Matrix4 &y) {
    Matrix4 out;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            out[i][j] = x[i][j] + y[i][j];
        }
    }
    return out;
}

std::array<GaussInt, 4> apply(const Matrix4 &m, const std::array<GaussInt, 4> &v) {
    std::array<GaussInt, 4> out{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            out[i] = out[i] + m[i][j] * v[j];
        }
    }
    return out;
}

bool is_pm_eigenvector(const Matrix4 &m, const BasisVector &v) {
    auto image = apply(m, v.amps);
    std::array<GaussInt, 4> negated;
    std::transform(v.amps.begin(), v.amps.end(), negated.begin(), [](const GaussInt &g) { return -g; });
    return image == v.amps || image == negated;
}

std::string row_label(const Row &row, int c1, int c2) {
    return row[c1 - 1].to_string() + " and " + row[c2 - 1].to_string();
}

}  // namespace

std::string to_string(const Rational &q) {
    if (q.denominator() == 1) {
        return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string GaussInt::to_string() const {
    auto imag_part = [](std::int64_t v) {
        if (v == 1) {
            return std::string("i");
        }
        if (v == -1) {
            return std::string("-i");
        }
        return std::to_string(v) + "i";
    };
    if (im == 0) {
        return std::to_string(re);
    }
    if (re == 0) {
        return imag_part(im);
    }
    std::string i = imag_part(im);
    return std::to_string(re) + (im > 0 ? "+" : "") + i;
}

GaussInt unit(int k) {
    static constexpr std::array<GaussInt, 4> units = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    return units[((k % 4) + 4) % 4];
}

Matrix4 identity_matrix() {
    Matrix4 m{};
    for (int i = 0; i < 4; i++) {
        m[i][i] = {1, 0};
    }
    return m;
}

Matrix4 operator*(const Matrix4 &x, const Matrix4 &y) {
    Matrix4 out{};
    for (int i = 0; i < 4; i++) {
        for (int k = 0; k < 4; k++) {
            if (x[i][k].is_zero()) {
                continue;
            }
            for (int j = 0; j < 4; j++) {
                out[i][j] = out[i][j] + x[i][k] * y[k][j];
            }
        }
    }
    return out;
}

Matrix4 PauliOp::matrix() const {
    Matrix2 q1 = factor_matrix(factors[0]);
    Matrix2 q2 = factor_matrix(factors[1]);
    GaussInt p = unit(phase);
    Matrix4 m{};
    for (int i1 = 0; i1 < 2; i1++) {
        for (int i2 = 0; i2 < 2; i2++) {
            for (int j1 = 0; j1 < 2; j1++) {
                for (int j2 = 0; j2 < 2; j2++) {
                    m[2 * i1 + i2][2 * j1 + j2] = p * q1[i1][j1] * q2[i2][j2];
                }
            }
        }
    }
    return m;
}

std::string PauliOp::name() const {
    std::string out;
    for (const auto &f : factors) {
        out += f.x ? (f.z ? 'Y' : 'X') : (f.z ? 'Z' : 'I');
    }
    return out;
}

std::string PauliOp::to_string() const {
    static constexpr std::array<const char *, 4> prefixes = {"+", "+i", "-", "-i"};
    return prefixes[phase % 4] + name();
}

PauliOp parse_pauli_word(std::string_view word) {
    if (word.size() != 2) {
        throw std::invalid_argument("Pauli word '" + std::string(word) + "' must have two letters");
    }
    PauliOp op;
    for (size_t k = 0; k < 2; k++) {
        switch (word[k]) {
            case 'I':
                break;
            case 'X':
                op.factors[k] = {1, 0};
                break;
            case 'Y':
                op.factors[k] = {1, 1};
                break;
            case 'Z':
                op.factors[k] = {0, 1};
                break;
            default:
                throw std::invalid_argument("Pauli word '" + std::string(word) + "' has a letter outside IXYZ");
        }
    }
    return hermitian_canonical(op);
}

PauliOp point_to_operator(const Point &p, const DualBasis &basis) {
    if (basis.ctx().degree() != 2) {
        throw UnsupportedBasis("two-qubit operators need a degree-2 field");
    }
    auto xs = coordinates(p.a, basis);
    auto zs = coordinates(p.b, basis);
    PauliOp op;
    for (size_t k = 0; k < 2; k++) {
        op.factors[k] = {xs[k], zs[k]};
    }
    return op;
}

Point operator_to_point(const PauliOp &op, const DualBasis &basis) {
    if (!basis.self_dual() || basis.ctx().degree() != 2) {
        throw UnsupportedBasis("operator labels need a self-dual basis of a degree-2 field");
    }
    std::vector<std::uint8_t> xs{op.factors[0].x, op.factors[1].x};
    std::vector<std::uint8_t> zs{op.factors[0].z, op.factors[1].z};
    return {from_coordinates(xs, basis), from_coordinates(zs, basis)};
}

PauliOp hermitian_canonical(const PauliOp &op) {
    PauliOp out = op;
    out.phase = 0;
    for (const auto &f : op.factors) {
        out.phase += f.x & f.z;
    }
    return out;
}

PauliOp op_product(const PauliOp &x, const PauliOp &y) {
    // Z X = -X Z on each factor.
    PauliOp out;
    int phase = x.phase + y.phase;
    for (size_t k = 0; k < 2; k++) {
        const auto &f = x.factors[k];
        const auto &g = y.factors[k];
        phase += 2 * (f.z & g.x);
        out.factors[k] = {static_cast<std::uint8_t>(f.x ^ g.x), static_cast<std::uint8_t>(f.z ^ g.z)};
    }
    out.phase = static_cast<std::uint8_t>(phase % 4);
    return out;
}

bool commutes_matrix(const PauliOp &x, const PauliOp &y) {
    Matrix4 mx = x.matrix();
    Matrix4 my = y.matrix();
    return mx * my == my * mx;
}

std::string BasisVector::to_string() const {
    std::string out = "(";
    for (size_t j = 0; j < amps.size(); j++) {
        if (j) {
            out += ", ";
        }
        out += amps[j].to_string();
    }
    return out + ")/√" + std::to_string(norm2);
}

std::array<std::complex<double>, 4> BasisVector::to_complex() const {
    double scale = 1.0 / std::sqrt(static_cast<double>(norm2));
    std::array<std::complex<double>, 4> out;
    for (size_t j = 0; j < 4; j++) {
        out[j] = {amps[j].re * scale, amps[j].im * scale};
    }
    return out;
}

GaussInt inner(const BasisVector &v, const BasisVector &w) {
    GaussInt sum;
    for (size_t j = 0; j < 4; j++) {
        sum = sum + v.amps[j].conj() * w.amps[j];
    }
    return sum;
}

RationalMatrix4 projector(const PauliOp &w1, const PauliOp &w2, int s1, int s2) {
    Matrix4 id = identity_matrix();
    Matrix4 q = plus(id, scaled(w1.matrix(), {s1, 0})) * plus(id, scaled(w2.matrix(), {s2, 0}));
    RationalMatrix4 out;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            out[i][j] = {Rational(q[i][j].re, 4), Rational(q[i][j].im, 4)};
        }
    }
    return out;
}

Basis joint_eigenbasis(const Row &row, const DualBasis &basis) {
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            if (!commutes(row[i], row[j])) {
                throw PreconditionError("points " + row_label(row, i + 1, j + 1) + " do not commute");
            }
        }
    }
    Row sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0].is_zero()) {
        throw DegenerateRow("row contains the identity point " + sorted[0].to_string());
    }
    if (sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
        throw DegenerateRow("row repeats a point");
    }

    std::array<Matrix4, 3> hermitian;
    for (size_t k = 0; k < 3; k++) {
        hermitian[k] = hermitian_canonical(point_to_operator(sorted[k], basis)).matrix();
    }
    Matrix4 id = identity_matrix();
    Basis out;
    static constexpr std::array<std::array<int, 2>, 4> signs = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (size_t v = 0; v < 4; v++) {
        // q = 4 P(s1, s2); P is a rank-1 projector iff tr q = 4 and q^2 = 4 q.
        Matrix4 q = plus(id, scaled(hermitian[0], {signs[v][0], 0})) * plus(id, scaled(hermitian[1], {signs[v][1], 0}));
        GaussInt tr;
        for (int i = 0; i < 4; i++) {
            tr = tr + q[i][i];
        }
        if (tr != GaussInt{4, 0} || q * q != scaled(q, {4, 0})) {
            throw DegenerateRow("generators do not fix a one-dimensional joint eigenspace");
        }
        int col = 0;
        while (col < 4 && std::all_of(q.begin(), q.end(), [&](const auto &r) { return r[col].is_zero(); })) {
            col++;
        }
        BasisVector vec;
        std::int64_t g = 0;
        for (int i = 0; i < 4; i++) {
            vec.amps[i] = q[i][col];
            g = std::gcd(g, std::gcd(vec.amps[i].re, vec.amps[i].im));
        }
        for (auto &amp : vec.amps) {
            amp = {amp.re / g, amp.im / g};
        }
        const GaussInt lead = *std::find_if(vec.amps.begin(), vec.amps.end(), [](const GaussInt &a) {
            return !a.is_zero();
        });
        for (int k = 0; k < 4; k++) {
            GaussInt rotated = unit(k) * lead;
            if (rotated.re > 0 && rotated.im >= 0) {
                for (auto &amp : vec.amps) {
                    amp = unit(k) * amp;
                }
                break;
            }
        }
        for (const auto &amp : vec.amps) {
            vec.norm2 += amp.norm2();
        }
        for (const auto &h : hermitian) {
            if (!is_pm_eigenvector(h, vec)) {
                throw DegenerateRow("projector column is not a joint eigenvector of the row");
            }
        }
        out[v] = vec;
    }
    return out;
}

Rational overlap2(const BasisVector &v, const BasisVector &w) {
    if (v.norm2 <= 0 || w.norm2 <= 0) {
        throw PreconditionError("overlap of a zero vector");
    }
    return Rational(inner(v, w).norm2(), v.norm2 * w.norm2);
}

const char *to_string(Separability s) {
    switch (s) {
        case Separability::separable:
            return "separable";
        case Separability::entangled:
            return "entangled";
        case Separability::anomaly:
            return "anomaly";
    }
    return "?";
}

Separability classify_basis(const Basis &basis) {
    int product = 0;
    for (const auto &v : basis) {
        GaussInt det = v.amps[0] * v.amps[3] - v.amps[1] * v.amps[2];
        product += det.is_zero();
    }
    if (product == static_cast<int>(basis.size())) {
        return Separability::separable;
    }
    if (product == 0) {
        return Separability::entangled;
    }
    return Separability::anomaly;
}

bool CrossOverlap::unbiased() const {
    for (const auto &row : values) {
        for (const auto &v : row) {
            if (v != Rational(1, 4)) {
                return false;
            }
        }
    }
    return true;
}

bool MubReport::rows_commute() const {
    return std::all_of(row_commutes.begin(), row_commutes.end(), [](bool b) { return b; });
}

bool MubReport::all_orthonormal() const {
    return std::all_of(orthonormal.begin(), orthonormal.end(), [](bool b) { return b; });
}

std::vector<std::string> MubReport::failures() const {
    std::vector<std::string> out;
    for (const auto &f : commutation_failures) {
        std::string line = "row " + std::to_string(f.row) + ": columns " + std::to_string(f.col1) + " and " +
                           std::to_string(f.col2) + " do not commute";
        if (f.phase_space != f.matrix) {
            line += " (trace predicate and matrix commutator disagree)";
        }
        out.push_back(line);
    }
    if (contains_identity) {
        out.push_back("partition: table contains the identity point (0,0)");
    }
    for (const auto &p : duplicate_points) {
        out.push_back("partition: point " + p.to_string() + " appears more than once");
    }
    for (size_t r = 0; r < 5; r++) {
        std::string prefix = "row " + std::to_string(r + 1) + ": ";
        if (!bases[r]) {
            out.push_back(prefix + "no joint eigenbasis (" + basis_errors[r] + ")");
            continue;
        }
        if (!orthonormal[r]) {
            out.push_back(prefix + "eigenbasis is not orthonormal");
        }
        if (!eigenvectors[r]) {
            out.push_back(prefix + "basis vectors are not joint eigenvectors");
        }
    }
    for (const auto &o : overlaps) {
        if (!o.unbiased()) {
            out.push_back("rows " + std::to_string(o.row1) + " and " + std::to_string(o.row2) +
                          ": an overlap differs from 1/4");
        }
    }
    if (overlaps.size() != 10) {
        out.push_back("unbiasedness: only " + std::to_string(overlaps.size()) + " of 10 basis pairs comparable");
    }
    if (separable != 3 || entangled != 2) {
        out.push_back("structure: signature (" + std::to_string(separable) + "," + std::to_string(entangled) +
                      ") separable/entangled, expected (3,2)" +
                      (anomalous ? ", " + std::to_string(anomalous) + " mixed" : std::string()));
    }
    return out;
}

MubReport verify_mub(const MubTable &table, const DualBasis &basis) {
    MubReport report;
    const auto &rows = table.rows();

    for (int r = 0; r < 5; r++) {
        report.row_commutes[r] = true;
        for (int i = 0; i < 3; i++) {
            for (int j = i + 1; j < 3; j++) {
                bool ps = commutes(rows[r][i], rows[r][j]);
                bool mx = commutes_matrix(point_to_operator(rows[r][i], basis), point_to_operator(rows[r][j], basis));
                report.routes_agree = report.routes_agree && ps == mx;
                if (!ps || !mx) {
                    report.row_commutes[r] = false;
                    report.commutation_failures.push_back({r + 1, i + 1, j + 1, ps, mx});
                }
            }
        }
    }

    std::map<Point, int> counts;
    for (const auto &row : rows) {
        for (const auto &p : row) {
            counts[p]++;
            report.contains_identity = report.contains_identity || p.is_zero();
        }
    }
    for (const auto &[p, n] : counts) {
        if (n > 1) {
            report.duplicate_points.push_back(p);
        }
    }
    report.partition = !report.contains_identity && report.duplicate_points.empty();

    for (int r = 0; r < 5; r++) {
        try {
            report.bases[r] = joint_eigenbasis(rows[r], basis);
        } catch (const std::invalid_argument &e) {
            report.basis_errors[r] = e.what();
            continue;
        }
        const Basis &b = *report.bases[r];

        bool ortho = true;
        RationalMatrix4 sum{};
        for (size_t i = 0; i < 4; i++) {
            ortho = ortho && b[i].norm2 > 0;
            for (size_t j = i + 1; j < 4; j++) {
                ortho = ortho && inner(b[i], b[j]).is_zero();
            }
            for (int x = 0; x < 4; x++) {
                for (int y = 0; y < 4; y++) {
                    GaussInt outer = b[i].amps[x] * b[i].amps[y].conj();
                    sum[x][y] = sum[x][y] + GaussRational{Rational(outer.re, b[i].norm2), Rational(outer.im, b[i].norm2)};
                }
            }
        }
        for (int x = 0; x < 4; x++) {
            for (int y = 0; y < 4; y++) {
                ortho = ortho && sum[x][y] == GaussRational{Rational(x == y ? 1 : 0), Rational(0)};
            }
        }
        report.orthonormal[r] = ortho;

        bool eig = true;
        for (const auto &p : rows[r]) {
            Matrix4 h = hermitian_canonical(point_to_operator(p, basis)).matrix();
            for (const auto &v : b) {
                eig = eig && is_pm_eigenvector(h, v);
            }
        }
        report.eigenvectors[r] = eig;

        Separability s = classify_basis(b);
        report.separability[r] = s;
        report.separable += s == Separability::separable;
        report.entangled += s == Separability::entangled;
        report.anomalous += s == Separability::anomaly;
    }

    for (int r1 = 0; r1 < 5; r1++) {
        for (int r2 = r1 + 1; r2 < 5; r2++) {
            if (!report.bases[r1] || !report.bases[r2]) {
                continue;
            }
            CrossOverlap o{r1 + 1, r2 + 1, {}};
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    o.values[i][j] = overlap2((*report.bases[r1])[i], (*report.bases[r2])[j]);
                }
            }
            report.overlaps.push_back(o);
        }
    }
    report.unbiased = report.overlaps.size() == 10 &&
                      std::all_of(report.overlaps.begin(), report.overlaps.end(), [](const auto &o) {
                          return o.unbiased();
                      });

    bool eigen_ok = std::all_of(report.eigenvectors.begin(), report.eigenvectors.end(), [](bool b) { return b; });
    report.valid = report.rows_commute() && report.routes_agree && report.partition && report.all_orthonormal() &&
                   eigen_ok && report.unbiased && report.separable == 3 && report.entangled == 2;
    return report;
}

}  // namespace mub

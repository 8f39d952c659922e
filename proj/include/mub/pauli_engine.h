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

// Exact two-qubit Pauli operators, stabilizer-projector eigenbases, and the
// unbiasedness verifier. No floating point is used for any decision.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mub/phase_space.h"

namespace mub {

class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateRow : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

using Rational = boost::rational<std::int64_t>;

/// "0", "1/4", "-3/2".
std::string to_string(const Rational &q);

struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    GaussInt operator+(const GaussInt &o) const {
        return {re + o.re, im + o.im};
    }
    GaussInt operator-(const GaussInt &o) const {
        return {re - o.re, im - o.im};
    }
    GaussInt operator-() const {
        return {-re, -im};
    }
    GaussInt operator*(const GaussInt &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt conj() const {
        return {re, -im};
    }
    std::int64_t norm2() const {
        return re * re + im * im;
    }
    bool is_zero() const {
        return re == 0 && im == 0;
    }
    /// "0", "-i", "1+i", "2-3i".
    std::string to_string() const;

    bool operator==(const GaussInt &o) const = default;
};

/// i^k for k in 0..3.
GaussInt unit(int k);

struct GaussRational {
    Rational re;
    Rational im;

    GaussRational operator+(const GaussRational &o) const {
        return {re + o.re, im + o.im};
    }
    GaussRational operator*(const GaussRational &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussRational &o) const = default;
};

using Matrix4 = std::array<std::array<GaussInt, 4>, 4>;
using RationalMatrix4 = std::array<std::array<GaussRational, 4>, 4>;

Matrix4 identity_matrix();
Matrix4 operator*(const Matrix4 &x, const Matrix4 &y);

/// sigma_x^x sigma_z^z on one qubit.
struct PauliFactor {
    std::uint8_t x = 0;
    std::uint8_t z = 0;

    bool operator==(const PauliFactor &o) const = default;
};

/// i^phase (factor 1) tensor (factor 2). Qubit 1 is the high bit of the
/// computational-basis index.
struct PauliOp {
    std::array<PauliFactor, 2> factors{};
    std::uint8_t phase = 0;

    Matrix4 matrix() const;
    /// Word over {I, X, Y, Z}, ignoring phase; Y marks a factor with x = z = 1.
    std::string name() const;
    /// name() prefixed by the phase: "+XY", "-iZZ".
    std::string to_string() const;
    bool is_identity_word() const {
        return factors[0] == PauliFactor{} && factors[1] == PauliFactor{};
    }

    bool operator==(const PauliOp &o) const = default;
};

/// Parses a word such as "XY" into its Hermitian representative.
PauliOp parse_pauli_word(std::string_view word);

/// The translation operator of a point: exponents are the self-dual
/// coordinates of a (sigma_x) and b (sigma_z), phase 1.
PauliOp point_to_operator(const Point &p, const DualBasis &basis = DualBasis::gf4_self_dual());
Point operator_to_point(const PauliOp &op, const DualBasis &basis = DualBasis::gf4_self_dual());

/// i^(sum_k x_k z_k) times the bare word, which is Hermitian and squares to
/// the identity. The phase of the input is discarded.
PauliOp hermitian_canonical(const PauliOp &op);

PauliOp op_product(const PauliOp &x, const PauliOp &y);

/// Exact matrix commutator test.
bool commutes_matrix(const PauliOp &x, const PauliOp &y);

struct BasisVector {
    std::array<GaussInt, 4> amps{};
    std::int64_t norm2 = 0;

    /// "(1, i, -1, -i)/√4".
    std::string to_string() const;
    /// Normalized floating-point amplitudes, for display only.
    std::array<std::complex<double>, 4> to_complex() const;

    bool operator==(const BasisVector &o) const = default;
};

using Basis = std::array<BasisVector, 4>;

/// <v|w> without normalization.
GaussInt inner(const BasisVector &v, const BasisVector &w);

/// (I + s1 W1)(I + s2 W2) / 4 for Hermitian commuting W1, W2, s = +-1.
RationalMatrix4 projector(const PauliOp &w1, const PauliOp &w2, int s1, int s2);

/// Joint eigenbasis of a commuting row. The generators are the Hermitian
/// forms of the first two points in sorted order; vectors come in sign order
/// (+,+), (+,-), (-,+), (-,-). Each is the first nonzero column of its
/// projector, divided by the gcd of its parts and rotated by a unit so the
/// leading amplitude has re > 0 and im >= 0.
///
/// Throws PreconditionError if the points do not pairwise commute and
/// DegenerateRow if they are not distinct and nonzero.
Basis joint_eigenbasis(const Row &row, const DualBasis &basis = DualBasis::gf4_self_dual());

/// |<v|w>|^2 / (|v|^2 |w|^2). Throws PreconditionError on a zero vector.
Rational overlap2(const BasisVector &v, const BasisVector &w);

enum class Separability { separable, entangled, anomaly };

const char *to_string(Separability s);

/// Product test on the 2x2 amplitude matrix of every vector: determinant
/// zero for all is separable, nonzero for all is entangled.
Separability classify_basis(const Basis &basis);

struct CommutationFailure {
    int row;
    int col1;
    int col2;
    bool phase_space;
    bool matrix;
};

struct CrossOverlap {
    int row1;
    int row2;
    std::array<std::array<Rational, 4>, 4> values;

    bool unbiased() const;
};

struct MubReport {
    std::array<bool, 5> row_commutes{};
    std::vector<CommutationFailure> commutation_failures;
    /// The trace predicate and the matrix commutator agreed on every pair.
    bool routes_agree = true;

    bool partition = false;
    std::vector<Point> duplicate_points;
    bool contains_identity = false;

    std::array<std::optional<Basis>, 5> bases;
    std::array<std::string, 5> basis_errors;
    /// Pairwise orthogonal, and the rank-1 projectors sum to the identity.
    std::array<bool, 5> orthonormal{};
    /// Each vector is a +-1 eigenvector of all three Hermitian row operators.
    std::array<bool, 5> eigenvectors{};

    std::vector<CrossOverlap> overlaps;
    bool unbiased = false;

    std::array<std::optional<Separability>, 5> separability;
    int separable = 0;
    int entangled = 0;
    int anomalous = 0;

    bool valid = false;

    bool rows_commute() const;
    bool all_orthonormal() const;
    /// One human-readable line per failed check, in check order.
    std::vector<std::string> failures() const;
};

MubReport verify_mub(const MubTable &table, const DualBasis &basis = DualBasis::gf4_self_dual());

}  // namespace mub

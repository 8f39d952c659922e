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

// Exact arithmetic in GF(2^n), 1 <= n <= 8.
//
// Elements are stored in the polynomial basis {1, x, ..., x^(n-1)} as an
// n-bit coefficient vector. Every element carries the reduction polynomial of
// its field as a context tag; binary operations reject mismatched tags.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mub {

class ContextMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedBasis : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class FieldElement;

/// The field GF(2^n) defined by an irreducible polynomial of degree n.
///
/// The polynomial is stored as a bit mask including the leading x^n term,
/// so x^2 + x + 1 is 0b111.
class FieldCtx {
   public:
    static constexpr unsigned kMaxDegree = 8;

    /// Throws std::invalid_argument unless `poly` has degree exactly `n`,
    /// 1 <= n <= kMaxDegree, and is irreducible over GF(2).
    FieldCtx(unsigned n, std::uint16_t poly);

    /// GF(4) with x^2 + x + 1, the only irreducible quadratic over GF(2).
    static FieldCtx gf4();

    /// Parses "x^2+x+1" style text. Terms may appear in any order.
    static FieldCtx parse(std::string_view text);

    unsigned degree() const {
        return n_;
    }
    std::uint16_t poly() const {
        return poly_;
    }
    unsigned size() const {
        return 1u << n_;
    }
    std::string to_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x. In GF(4) this is the primitive element u (mu).
    FieldElement generator() const;
    /// Throws std::out_of_range if `bits` has a coefficient at or above x^n.
    FieldElement element(unsigned bits) const;
    /// All field elements in increasing coefficient-vector order.
    std::vector<FieldElement> elements() const;

    /// Accepts "0", "1", "u", "u<k>" (u^k, u = class of x) and "0x<hex>".
    /// Throws std::invalid_argument on anything else.
    FieldElement parse_element(std::string_view text) const;

    bool operator==(const FieldCtx &other) const = default;

   private:
    struct Unchecked {};
    FieldCtx(unsigned n, std::uint16_t poly, Unchecked) : n_(n), poly_(poly) {
    }
    friend class FieldElement;

    unsigned n_;
    std::uint16_t poly_;
};

/// Polynomial-basis coefficient bits plus the field tag.
///
/// Ordering compares coefficient vectors as integers, which for GF(4) gives
/// 0 < 1 < u < u2. A default-constructed element is the zero of GF(4).
class FieldElement {
   public:
    FieldElement() = default;

    unsigned bits() const {
        return bits_;
    }
    FieldCtx ctx() const;
    bool is_zero() const {
        return bits_ == 0;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement square() const {
        return *this * *this;
    }
    FieldElement pow(unsigned exponent) const;

    /// "0", "1", "u", "u2" in GF(4). In larger fields powers of the class of
    /// x print as "u<k>"; elements outside that cyclic group print in hex.
    std::string to_string() const;

    bool operator==(const FieldElement &other) const = default;
    std::strong_ordering operator<=>(const FieldElement &other) const;

   private:
    friend class FieldCtx;
    FieldElement(std::uint8_t bits, std::uint16_t poly) : bits_(bits), poly_(poly) {
    }
    void require_same_field(const FieldElement &other) const;

    std::uint8_t bits_ = 0;
    std::uint16_t poly_ = 0b111;
};

inline std::ostream &operator<<(std::ostream &out, const FieldElement &x) {
    return out << x.to_string();
}

FieldElement gf_add(const FieldElement &x, const FieldElement &y);
FieldElement gf_mul(const FieldElement &x, const FieldElement &y);

/// tr x = x + x^2 + x^4 + ... + x^(2^(n-1)). The result is 0 or 1.
FieldElement trace(const FieldElement &x);
/// trace(x) as a bit.
bool trace_bit(const FieldElement &x);

/// An ordered basis of GF(2^n) over GF(2).
class DualBasis {
   public:
    /// Throws std::invalid_argument if the elements are not n linearly
    /// independent members of one field, ContextMismatch if fields differ.
    explicit DualBasis(std::vector<FieldElement> elements);

    /// {u, u2} in GF(4).
    static DualBasis gf4_self_dual();

    const std::vector<FieldElement> &elements() const {
        return elements_;
    }
    bool self_dual() const {
        return self_dual_;
    }
    FieldCtx ctx() const {
        return elements_.front().ctx();
    }

   private:
    std::vector<FieldElement> elements_;
    bool self_dual_;
};

/// True iff tr(e_i e_j) = delta_ij for every pair.
bool is_self_dual(const DualBasis &basis);

/// Expansion coefficients (x_{e_1}, ..., x_{e_n}) of x in a self-dual basis,
/// read off as x_{e_i} = tr(x e_i). Throws UnsupportedBasis otherwise.
std::vector<std::uint8_t> coordinates(const FieldElement &x, const DualBasis &basis);

/// Inverse of coordinates(): sum of the selected basis elements.
FieldElement from_coordinates(const std::vector<std::uint8_t> &coords, const DualBasis &basis);

}  // namespace mub

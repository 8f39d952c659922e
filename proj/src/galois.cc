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

#include "mub/galois.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace mub {

namespace {

int degree_of(unsigned poly) {
    return poly == 0 ? -1 : static_cast<int>(std::bit_width(poly)) - 1;
}

// Remainder of carry-less division over GF(2).
unsigned poly_mod(unsigned dividend, unsigned divisor) {
    int dd = degree_of(divisor);
    for (int k = degree_of(dividend); k >= dd; k--) {
        if (dividend & (1u << k)) {
            dividend ^= divisor << (k - dd);
        }
    }
    return dividend;
}

bool is_irreducible(unsigned poly) {
    int n = degree_of(poly);
    for (unsigned divisor = 2; degree_of(divisor) < n; divisor++) {
        if (poly_mod(poly, divisor) == 0) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_unsigned(std::string_view s, unsigned &out, int base = 10) {
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

FieldCtx::FieldCtx(unsigned n, std::uint16_t poly) : n_(n), poly_(poly) {
    if (n == 0 || n > kMaxDegree) {
        throw std::invalid_argument("field degree must be in 1.." + std::to_string(kMaxDegree));
    }
    if (degree_of(poly) != static_cast<int>(n)) {
        throw std::invalid_argument("polynomial " + to_string() + " does not have degree " + std::to_string(n));
    }
    if (!is_irreducible(poly)) {
        throw std::invalid_argument("polynomial " + to_string() + " is reducible over GF(2)");
    }
}

FieldCtx FieldCtx::gf4() {
    return FieldCtx(2, 0b111, Unchecked{});
}

FieldCtx FieldCtx::parse(std::string_view text) {
    unsigned poly = 0;
    std::string_view rest = text;
    while (true) {
        auto plus = rest.find('+');
        std::string_view term = trim(rest.substr(0, plus));
        unsigned power;
        if (term == "1") {
            power = 0;
        } else if (term == "x") {
            power = 1;
        } else if (term.starts_with("x^") && parse_unsigned(term.substr(2), power) && power <= kMaxDegree) {
        } else {
            throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
        }
        if (poly & (1u << power)) {
            throw std::invalid_argument("repeated term in polynomial '" + std::string(text) + "'");
        }
        poly |= 1u << power;
        if (plus == std::string_view::npos) {
            break;
        }
        rest = rest.substr(plus + 1);
    }
    int n = degree_of(poly);
    if (n < 1) {
        throw std::invalid_argument("polynomial '" + std::string(text) + "' has degree 0");
    }
    return FieldCtx(static_cast<unsigned>(n), static_cast<std::uint16_t>(poly));
}

std::string FieldCtx::to_string() const {
    std::string out;
    for (int k = degree_of(poly_); k >= 0; k--) {
        if (!(poly_ & (1u << k))) {
            continue;
        }
        if (!out.empty()) {
            out += '+';
        }
        if (k == 0) {
            out += '1';
        } else if (k == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(k);
        }
    }
    return out;
}

FieldElement FieldCtx::zero() const {
    return FieldElement(0, poly_);
}

FieldElement FieldCtx::one() const {
    return FieldElement(1, poly_);
}

FieldElement FieldCtx::generator() const {
    // For n = 1 the class of x reduces to 1.
    return FieldElement(static_cast<std::uint8_t>(poly_mod(0b10, poly_)), poly_);
}

FieldElement FieldCtx::element(unsigned bits) const {
    if (bits >= size()) {
        throw std::out_of_range("coefficient vector " + std::to_string(bits) + " too wide for " + to_string());
    }
    return FieldElement(static_cast<std::uint8_t>(bits), poly_);
}

std::vector<FieldElement> FieldCtx::elements() const {
    std::vector<FieldElement> out;
    out.reserve(size());
    for (unsigned bits = 0; bits < size(); bits++) {
        out.push_back(FieldElement(static_cast<std::uint8_t>(bits), poly_));
    }
    return out;
}

FieldElement FieldCtx::parse_element(std::string_view text) const {
    auto fail = [&]() -> FieldElement {
        throw std::invalid_argument("invalid element literal '" + std::string(text) + "'");
    };
    if (text == "0") {
        return zero();
    }
    if (text == "1") {
        return one();
    }
    if (text == "u") {
        return generator();
    }
    unsigned value;
    if (text.starts_with("u")) {
        if (text.size() > 1 && text[1] != '0' && parse_unsigned(text.substr(1), value)) {
            return generator().pow(value);
        }
        return fail();
    }
    if (text.starts_with("0x") && parse_unsigned(text.substr(2), value, 16) && value < size()) {
        return element(value);
    }
    return fail();
}

FieldCtx FieldElement::ctx() const {
    return FieldCtx(static_cast<unsigned>(degree_of(poly_)), poly_, FieldCtx::Unchecked{});
}

void FieldElement::require_same_field(const FieldElement &other) const {
    if (poly_ != other.poly_) {
        throw ContextMismatch("elements of " + ctx().to_string() + " and " + other.ctx().to_string() + " mixed");
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    require_same_field(other);
    return FieldElement(bits_ ^ other.bits_, poly_);
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    require_same_field(other);
    unsigned n = static_cast<unsigned>(degree_of(poly_));
    unsigned a = bits_;
    unsigned b = other.bits_;
    unsigned acc = 0;
    while (b) {
        if (b & 1) {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a & (1u << n)) {
            a ^= poly_;
        }
    }
    return FieldElement(static_cast<std::uint8_t>(acc), poly_);
}

FieldElement FieldElement::pow(unsigned exponent) const {
    FieldElement result(1, poly_);
    FieldElement base = *this;
    while (exponent) {
        if (exponent & 1) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

std::string FieldElement::to_string() const {
    if (bits_ <= 1) {
        return bits_ ? "1" : "0";
    }
    FieldCtx field = ctx();
    FieldElement g = field.generator();
    FieldElement power = g;
    for (unsigned k = 1; k + 1 < field.size(); k++) {
        if (power == *this) {
            return k == 1 ? "u" : "u" + std::to_string(k);
        }
        power = power * g;
    }
    std::ostringstream out;
    out << "0x" << std::hex << static_cast<unsigned>(bits_);
    return out.str();
}

std::strong_ordering FieldElement::operator<=>(const FieldElement &other) const {
    if (auto c = poly_ <=> other.poly_; c != 0) {
        return c;
    }
    return bits_ <=> other.bits_;
}

FieldElement gf_add(const FieldElement &x, const FieldElement &y) {
    return x + y;
}

FieldElement gf_mul(const FieldElement &x, const FieldElement &y) {
    return x * y;
}

FieldElement trace(const FieldElement &x) {
    unsigned n = x.ctx().degree();
    FieldElement sum = x;
    FieldElement conjugate = x;
    for (unsigned k = 1; k < n; k++) {
        conjugate = conjugate.square();
        sum = sum + conjugate;
    }
    return sum;
}

bool trace_bit(const FieldElement &x) {
    return trace(x).bits() != 0;
}

DualBasis::DualBasis(std::vector<FieldElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("empty basis");
    }
    FieldCtx field = elements_.front().ctx();
    if (elements_.size() != field.degree()) {
        throw std::invalid_argument(
            "basis of " + field.to_string() + " needs " + std::to_string(field.degree()) + " elements");
    }
    for (const auto &e : elements_) {
        if (e.ctx() != field) {
            throw ContextMismatch("basis elements belong to different fields");
        }
    }
    // Independent iff no nonempty subset sums to zero.
    for (unsigned mask = 1; mask < (1u << elements_.size()); mask++) {
        unsigned sum = 0;
        for (size_t i = 0; i < elements_.size(); i++) {
            if (mask & (1u << i)) {
                sum ^= elements_[i].bits();
            }
        }
        if (sum == 0) {
            throw std::invalid_argument("basis elements are linearly dependent over GF(2)");
        }
    }
    self_dual_ = true;
    for (size_t i = 0; i < elements_.size(); i++) {
        for (size_t j = 0; j < elements_.size(); j++) {
            if (trace_bit(elements_[i] * elements_[j]) != (i == j)) {
                self_dual_ = false;
            }
        }
    }
}

DualBasis DualBasis::gf4_self_dual() {
    FieldCtx f = FieldCtx::gf4();
    FieldElement u = f.generator();
    return DualBasis({u, u * u});
}

bool is_self_dual(const DualBasis &basis) {
    return basis.self_dual();
}

std::vector<std::uint8_t> coordinates(const FieldElement &x, const DualBasis &basis) {
    if (!basis.self_dual()) {
        throw UnsupportedBasis("coordinate extraction by trace requires a self-dual basis");
    }
    std::vector<std::uint8_t> out;
    out.reserve(basis.elements().size());
    for (const auto &e : basis.elements()) {
        out.push_back(trace_bit(x * e) ? 1 : 0);
    }
    return out;
}

FieldElement from_coordinates(const std::vector<std::uint8_t> &coords, const DualBasis &basis) {
    if (coords.size() != basis.elements().size()) {
        throw std::invalid_argument("coordinate vector length does not match basis size");
    }
    FieldElement sum = basis.ctx().zero();
    for (size_t i = 0; i < coords.size(); i++) {
        if (coords[i]) {
            sum = sum + basis.elements()[i];
        }
    }
    return sum;
}

}  // namespace mub

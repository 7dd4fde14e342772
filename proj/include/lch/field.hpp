/**************************************************************************
 * field.hpp
 *
 * Copyright 2026 The lchconv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lch {

/// Element of GF(2^m), stored as its polynomial-basis bit pattern.
struct FieldElement {
    std::uint32_t bits = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

    /// Addition does not depend on the modulus, so it lives on the element.
    friend constexpr FieldElement operator+(FieldElement a, FieldElement b) { return {a.bits ^ b.bits}; }
    constexpr FieldElement& operator+=(FieldElement o) {
        bits ^= o.bits;
        return *this;
    }
    constexpr bool is_zero() const { return bits == 0; }
};

inline constexpr FieldElement kZero{0};
inline constexpr FieldElement kOne{1};

bool is_irreducible(std::uint64_t poly);
std::uint64_t smallest_irreducible(unsigned degree);

/**
 * GF(2^m) for 1 <= m <= 32. Immutable after construction.
 *
 * Degrees up to 16 use log/exp tables; larger degrees multiply bitwise.
 */
class Field {
public:
    /// Canonical field of the given degree (smallest irreducible modulus).
    explicit Field(unsigned degree);
    /// Explicit modulus; throws std::invalid_argument if it is not irreducible of that degree.
    Field(unsigned degree, std::uint64_t modulus);

    /// Parses `<m>:0x<hex>` or a bare degree `<m>`.
    static Field parse(std::string_view spec);

    unsigned degree() const { return degree_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return std::uint64_t{1} << degree_; }
    std::string spec_string() const;

    bool contains(FieldElement a) const { return (std::uint64_t{a.bits} >> degree_) == 0; }
    FieldElement element(std::uint64_t bits) const;

    FieldElement add(FieldElement a, FieldElement b) const { return a + b; }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (!exp_.empty()) {
            if (a.bits == 0 || b.bits == 0) return kZero;
            return {exp_[log_[a.bits] + log_[b.bits]]};
        }
        return mul_bitwise(a, b);
    }
    FieldElement square(FieldElement a) const { return mul(a, a); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow2k(FieldElement a, unsigned d) const;

    /// Relative trace from GF(2^e) down to GF(2^s).
    FieldElement trace_rel(FieldElement a, unsigned s, unsigned e) const;
    bool in_subfield(FieldElement a, unsigned d) const;
    FieldElement subfield_generator(unsigned d) const;
    FieldElement primitive() const { return primitive_; }
    bool divides_degree(unsigned d) const { return d != 0 && degree_ % d == 0; }

private:
    void init();
    FieldElement mul_bitwise(FieldElement a, FieldElement b) const;

    unsigned degree_;
    std::uint64_t modulus_;
    FieldElement primitive_{1};
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

std::string to_hex(FieldElement a);
FieldElement parse_element(const Field& field, std::string_view text);

}  // namespace lch

/**************************************************************************
 * basisgen.hpp
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
#include <utility>
#include <vector>

#include "lch/field.hpp"

namespace lch {

/// Ordered GF(2)-independent elements (b_0, ..., b_{n-1}) spanning the evaluation subspace.
using BasisVector = std::vector<FieldElement>;

/// The polynomial bases a coefficient vector can be expressed in.
enum class BasisKind { Monomial, Newton, Lagrange, LCH, TwistedLCH };

std::string_view basis_kind_name(BasisKind kind);
BasisKind parse_basis_kind(std::string_view name);

/// XOR of the basis entries selected by the set bits of i.
FieldElement enumerate_point(const BasisVector& beta, std::uint64_t i);

/// The first d entries.
BasisVector alpha_of(const BasisVector& beta, unsigned d);

/// Entries (q^{2^d} + q) with q = b_{d+i} / b_0, for i < n - d.
BasisVector delta_of(const Field& field, const BasisVector& beta, unsigned d);

bool is_independent(const BasisVector& beta);

/**
 * Subfield tower 1 = n_0 | n_1 | ... | n_m with one basis of GF(2^{n_{k+1}}) over
 * GF(2^{n_k}) per level.
 */
struct TowerSpec {
    std::vector<unsigned> degrees;
    std::vector<BasisVector> level_bases;
    std::vector<bool> trace_one;  // per level, only meaningful for quadratic levels

    std::string to_string() const;
};

/// Parses `1-2-4-12`; a `!` after a degree asks for the trace-one basis on the quadratic level ending there.
TowerSpec parse_tower(const Field& field, std::string_view text);

/// Default level bases: powers of the subfield generator, or the trace-one pair where flagged.
TowerSpec make_tower(const Field& field, std::vector<unsigned> degrees, std::vector<bool> trace_one = {});

BasisVector construct_tower_basis(const Field& field, const TowerSpec& tower, unsigned n);

/// Basis of length 2^m_levels * t extending theta, a basis of GF(2^t) over GF(2).
BasisVector construct_gen_cantor(const Field& field, unsigned m_levels, unsigned t, const BasisVector& theta);

BasisVector construct_cantor(const Field& field, unsigned n);

/// (1, v) with v in GF(2^{2s}) of relative trace one over GF(2^s).
std::pair<FieldElement, FieldElement> make_quadratic_trace_basis(const Field& field, unsigned s);

/// (1, x, ..., x^{e/s-1}) for the generator x of GF(2^e).
BasisVector subfield_basis_powers(const Field& field, unsigned s, unsigned e);

/// Rejection-samples n independent elements from a seeded generator.
BasisVector random_basis(const Field& field, unsigned n, std::uint64_t seed);

std::string format_basis(const BasisVector& beta);
BasisVector parse_basis(const Field& field, std::string_view text);

}  // namespace lch

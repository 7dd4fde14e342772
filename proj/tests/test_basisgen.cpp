/**************************************************************************
 * test_basisgen.cpp
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

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lch/basisgen.hpp"
#include "test_support.hpp"

using namespace lch;

namespace {

// b_i = b_{i+2^k}^{2^{2^k}} + b_{i+2^k} wherever both indices exist
bool cantor_delta_relation(const Field& f, const BasisVector& b, unsigned k) {
    const unsigned s = 1u << k;
    for (std::size_t i = 0; i + s < b.size(); ++i)
        if (b[i] != f.pow2k(b[i + s], s) + b[i + s]) return false;
    return true;
}

bool prefix_in_subfields(const Field& f, const BasisVector& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        unsigned deg = 1;
        while (deg < i + 1) deg *= 2;
        if (!f.in_subfield(b[i], deg)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("basis kind names") {
    for (BasisKind k : {BasisKind::Monomial, BasisKind::Newton, BasisKind::Lagrange, BasisKind::LCH, BasisKind::TwistedLCH})
        CHECK(parse_basis_kind(basis_kind_name(k)) == k);
    CHECK(basis_kind_name(BasisKind::TwistedLCH) == "twisted-lch");
    CHECK_THROWS_AS(parse_basis_kind("chebyshev"), std::invalid_argument);
}

TEST_CASE("enumeration, alpha and delta") {
    Field f(8);
    const BasisVector b{{0x3}, {0x10}, {0x81}};
    CHECK(enumerate_point(b, 0) == kZero);
    CHECK(enumerate_point(b, 1) == b[0]);
    CHECK(enumerate_point(b, 3) == b[0] + b[1]);
    CHECK(enumerate_point(b, 7) == b[0] + b[1] + b[2]);
    CHECK_THROWS(enumerate_point(b, 8));

    CHECK(alpha_of(b, 2) == BasisVector{b[0], b[1]});
    CHECK(alpha_of(BasisVector{b[0], b[1]}, 1) == BasisVector{b[0]});

    const FieldElement g{0x57};
    const BasisVector one_g{kOne, g};
    CHECK(alpha_of(one_g, 1) == BasisVector{kOne});
    CHECK(delta_of(f, one_g, 1) == BasisVector{f.square(g) + g});
    CHECK_THROWS(delta_of(f, one_g, 2));
}

TEST_CASE("independence") {
    Field f(8);
    CHECK(is_independent({kOne, FieldElement{0x57}}));
    CHECK_FALSE(is_independent({FieldElement{0x57}, FieldElement{0x57}}));
    CHECK_FALSE(is_independent({FieldElement{0x3}, FieldElement{0x5}, FieldElement{0x6}}));
    CHECK_FALSE(is_independent({kZero}));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        const BasisVector b = random_basis(f, 6, rng());
        CHECK(is_independent(b));
        CHECK(is_independent(delta_of(f, b, 1)));
    }
}

TEST_CASE("Cantor bases") {
    CHECK(construct_cantor(Field(8), 1) == BasisVector{kOne});

    // GF(4): b_1 solves b^2 + b = 1, found by scanning all four elements
    Field f4(2);
    const BasisVector b2 = construct_cantor(f4, 2);
    CHECK(b2[0] == kOne);
    CHECK(f4.square(b2[1]) + b2[1] == kOne);

    Field f16(4);
    const BasisVector b4 = construct_cantor(f16, 4);
    CHECK(is_independent(b4));
    CHECK(b4[0] == kOne);
    CHECK(prefix_in_subfields(f16, b4));
    CHECK(cantor_delta_relation(f16, b4, 0));
    CHECK(cantor_delta_relation(f16, b4, 1));

    // dividing an 8-entry basis at d = 2^k leaves the prefix
    Field f8(8);
    const BasisVector b8 = construct_cantor(f8, 8);
    for (unsigned d : {1u, 2u, 4u}) CHECK(delta_of(f8, b8, d) == BasisVector(b8.begin(), b8.end() - d));

    CHECK_THROWS_WITH_AS(construct_cantor(Field(12), 8), "Cantor basis of dimension 8 requires 8 | 12", std::domain_error);
    CHECK_NOTHROW(construct_cantor(Field(12), 4));
}

TEST_CASE("generalized Cantor construction") {
    Field f(8);
    const BasisVector b = construct_gen_cantor(f, 3, 1, {kOne});
    REQUIRE(b.size() == 8);
    CHECK(b[0] == kOne);
    CHECK(is_independent(b));
    for (unsigned k = 0; k < 3; ++k) CHECK(cantor_delta_relation(f, b, k));

    Field f16(16);
    const BasisVector theta = subfield_basis_powers(f16, 1, 2);
    const BasisVector g = construct_gen_cantor(f16, 2, 2, theta);
    REQUIRE(g.size() == 8);
    CHECK(g[0] == theta[0]);
    CHECK(g[1] == theta[1]);
    CHECK(is_independent(g));
    for (unsigned i = 0; i + 2 < g.size(); ++i) CHECK(g[i] == f16.pow2k(g[i + 2], 2) + g[i + 2]);
    for (unsigned i = 0; i < 2; ++i) CHECK(f16.trace_rel(g[6 + i], 2, 8) == theta[i]);

    CHECK_THROWS_AS(construct_gen_cantor(f, 1, 2, {kOne}), std::invalid_argument);
    CHECK_THROWS_AS(construct_gen_cantor(Field(12), 3, 1, {kOne}), std::domain_error);
}

TEST_CASE("tower products") {
    Field f(4);
    const TowerSpec single = parse_tower(f, "1-4");
    CHECK(construct_tower_basis(f, single, 4) == single.level_bases[0]);

    const TowerSpec t = parse_tower(f, "1-2-4");
    const BasisVector b = construct_tower_basis(f, t, 4);
    CHECK(b[0] == f.mul(t.level_bases[0][0], t.level_bases[1][0]));
    CHECK(b[3] == f.mul(t.level_bases[0][1], t.level_bases[1][1]));
    CHECK(is_independent(b));

    Field f12(12);
    CHECK(construct_tower_basis(f12, parse_tower(f12, "1-12"), 12).size() == 12);
    for (const char* spec : {"1-2-4-12", "1-3-6-12", "1-2!-4!-12", "1-3-6!-12", "1-6-12!"}) {
        const TowerSpec tw = parse_tower(f12, spec);
        CHECK(tw.to_string() == spec);
        CHECK(is_independent(construct_tower_basis(f12, tw, 12)));
    }
    CHECK_THROWS_AS(parse_tower(f12, "1-5-12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tower(f12, "1-3!-12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tower(f12, "1-2-8"), std::domain_error);
    CHECK_THROWS_AS(parse_tower(f12, "1--12"), std::invalid_argument);
}

TEST_CASE("quadratic trace-one level bases") {
    Field f(12);
    for (unsigned s : {1u, 2u, 3u, 6u}) {
        auto [one, v] = make_quadratic_trace_basis(f, s);
        CHECK(one == kOne);
        CHECK(f.in_subfield(v, 2 * s));
        CHECK(f.trace_rel(v, s, 2 * s) == kOne);
        CHECK_FALSE(f.in_subfield(v, s));
    }
}

TEST_CASE("subfield power bases") {
    Field f4(2);
    const BasisVector p = subfield_basis_powers(f4, 1, 2);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == kOne);
    CHECK(f4.square(p[1]) == p[1] + kOne);
    CHECK(is_independent(p));
    Field f12(12);
    CHECK(subfield_basis_powers(f12, 12, 12) == BasisVector{kOne});
    CHECK(subfield_basis_powers(f12, 2, 12).size() == 6);
    CHECK(subfield_basis_powers(f12, 1, 12).size() == 12);
}

TEST_CASE("random bases are reproducible") {
    Field f(13);
    CHECK(random_basis(f, 6, 42) == random_basis(f, 6, 42));
    CHECK(random_basis(f, 6, 42) != random_basis(f, 6, 43));
    CHECK(is_independent(random_basis(f, 13, 5)));
    CHECK_THROWS_AS(random_basis(f, 14, 1), std::invalid_argument);
}

TEST_CASE("basis text round trip") {
    Field f(12);
    const BasisVector b = random_basis(f, 5, 9);
    CHECK(parse_basis(f, format_basis(b)) == b);
    CHECK(format_basis({kOne, FieldElement{0xabc}}) == "1,abc");
    CHECK_THROWS(parse_basis(f, "1,,2"));
    CHECK_THROWS(parse_basis(f, "1,2000"));
}

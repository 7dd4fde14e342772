/**************************************************************************
 * test_precomp.cpp
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

#include "lch/precomp.hpp"
#include "test_support.hpp"

using namespace lch;
using lch::testing::random_element;

TEST_CASE("vertex bases") {
    Field f(12);
    const BasisVector b1 = random_basis(f, 1, 3);
    CHECK(compute_vertex_bases(f, ReductionTree::leaf(), b1)[0] == b1);

    Field f16(16);
    const BasisVector cantor = construct_cantor(f16, 9);
    const ReductionTree tree = build_cantor_tree(9);
    const auto bases = compute_vertex_bases(f16, tree, cantor);
    for (VertexId v = 0; v < tree.size(); ++v)
        CHECK(bases[v] == BasisVector(cantor.begin(), cantor.begin() + tree[v].leaves));

    // trivial tree: the delta chain is repeated delta_of with d = 1
    const BasisVector r = random_basis(f, 3, 8);
    const ReductionTree triv = build_trivial(3);
    const auto rb = compute_vertex_bases(f, triv, r);
    const VertexId d1 = triv[0].delta;
    const VertexId d2 = triv[d1].delta;
    CHECK(rb[d1] == delta_of(f, r, 1));
    CHECK(rb[d2] == delta_of(f, delta_of(f, r, 1), 1));
    CHECK(rb[triv[0].alpha] == BasisVector{r[0]});

    CHECK_THROWS_AS(compute_vertex_bases(f16, ReductionTree::parse("((*,(*,*)),*)"), construct_cantor(f16, 4)), std::invalid_argument);
}

TEST_CASE("table sizes") {
    Field f(16);
    CHECK(PrecompTable(f, ReductionTree::leaf(), construct_cantor(f, 1)).phi_entry_count() == 0);
    CHECK(PrecompTable(f, build_trivial(2), construct_cantor(f, 2)).phi_entry_count() == 1);
    CHECK(PrecompTable(f, build_cantor_tree(15), construct_cantor(f, 15)).phi_entry_count() == 105);
    Field f12(12);
    for (unsigned n = 1; n <= 12; ++n) {
        const BasisVector b = construct_tower_basis(f12, parse_tower(f12, "1-2-4-12"), n);
        CHECK(PrecompTable(f12, build_max_tree(n, {1, 2, 4, 12}), b).phi_entry_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("shift maps") {
    Field f(12);
    std::mt19937_64 rng(21);
    const BasisVector b = random_basis(f, 5, 77);
    const PrecompTable table(f, build_trivial(5), b);
    const ReductionTree& t = table.tree();

    for (int k = 0; k < 10; ++k) {
        const FieldElement lam = random_element(f, rng);
        const FieldElement lam2 = random_element(f, rng);
        // leaves: lambda / b_{v,0}
        for (VertexId v = 0; v < t.size(); ++v) {
            if (!t.is_leaf(v)) continue;
            CHECK(table.phi(v, t[v].first_leaf, lam) == f.div(lam, table.vertex_basis(v)[0]));
        }
        CHECK(table.phi(0, 3, kZero) == kZero);
        // the vector form agrees with the direct recursion and is linear in the shift
        const auto vec = table.initial_phi_vector(lam);
        REQUIRE(vec.size() == 5);
        for (unsigned u = 0; u < 5; ++u) CHECK(vec[u] == table.phi(0, u, lam));
        const auto vec2 = table.initial_phi_vector(lam2);
        const auto sum = table.initial_phi_vector(lam + lam2);
        for (unsigned u = 0; u < 5; ++u) CHECK(sum[u] == vec[u] + vec2[u]);
    }
    CHECK(table.initial_phi_vector(kZero) == std::vector<FieldElement>(5, kZero));

    const BasisVector one{FieldElement{0x321}};
    const PrecompTable single(f, ReductionTree::leaf(), one);
    CHECK(single.initial_phi_vector(FieldElement{0x5}) == std::vector<FieldElement>{f.div(FieldElement{0x5}, one[0])});
}

TEST_CASE("stored rows are shift maps at the prefix sums") {
    Field f(12);
    const BasisVector b = construct_tower_basis(f, parse_tower(f, "1-2-4-12"), 7);
    const PrecompTable table(f, build_max_tree(7, {1, 2, 4, 12}), b);
    const ReductionTree& t = table.tree();
    for (VertexId v = 0; v < t.size(); ++v) {
        if (t.is_leaf(v)) continue;
        const auto sig = table.sigma(v);
        REQUIRE(sig.size() == t[v].leaves - t[v].split);
        FieldElement acc = kZero;
        for (unsigned i = 0; i < sig.size(); ++i) {
            acc += table.vertex_basis(v)[t[v].split + i];
            CHECK(sig[i] == acc);
            const auto row = table.phi_row(v, i);
            for (unsigned u = 0; u < t[v].split; ++u) CHECK(row[u] == table.phi(t[v].alpha, t[t[v].alpha].first_leaf + u, sig[i]));
        }
        CHECK(table.delta_head(v) == table.vertex_basis(t[v].delta)[0]);
        CHECK(f.mul(table.delta_head(v), table.delta_head_inv(v)) == kOne);
    }
    CHECK_THROWS(table.phi_entry(0, 9, 0));
}

TEST_CASE("Cantor shift-map case table") {
    Field f(16);
    const unsigned n = 8;
    const BasisVector b = construct_cantor(f, n);
    const PrecompTable table(f, build_cantor_tree(n), b);
    const ReductionTree& t = table.tree();
    for (VertexId v = 0; v < t.size(); ++v) {
        const auto& node = t[v];
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned u = node.first_leaf; u < node.first_leaf + node.leaves; ++u) {
                const FieldElement got = table.phi(v, u, b[i]);
                if (t.is_leaf(v)) {
                    CHECK(got == b[i]);
                } else if (u < node.first_leaf + node.split) {
                    CHECK(got == table.phi(node.alpha, u, b[i]));
                } else if (i >= node.split) {
                    CHECK(got == table.phi(node.delta, u, b[i - node.split]));
                } else {
                    CHECK(got == kZero);
                }
            }
        }
    }
}

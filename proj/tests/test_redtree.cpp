/**************************************************************************
 * test_redtree.cpp
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
#include <set>
#include <stdexcept>

#include "lch/basisgen.hpp"
#include "lch/redtree.hpp"

using namespace lch;

TEST_CASE("serialization") {
    for (const char* s : {"*", "(*,*)", "((*,*),*)", "(*,((*,*),*))", "(((*,*),(*,*)),((*,*),*))"})
        CHECK(ReductionTree::parse(s).to_string() == s);
    for (const char* bad : {"", "(*)", "(*,*", "(*,*))", "(*;*)", "x"}) CHECK_THROWS_AS(ReductionTree::parse(bad), std::invalid_argument);

    const ReductionTree t = ReductionTree::parse("((*,*),(*,(*,*)))");
    CHECK(t.leaf_count() == 5);
    CHECK(t[t.root()].split == 2);
    CHECK(t[t[t.root()].delta].split == 1);
    CHECK(t[t[t.root()].delta].first_leaf == 2);
    CHECK(t.split_image() == std::set<unsigned>{1, 2});
    CHECK(ReductionTree::join(ReductionTree::parse("(*,*)"), ReductionTree::parse("(*,(*,*))")) == t);
}

TEST_CASE("trivial trees") {
    CHECK(build_trivial(1).to_string() == "*");
    CHECK(build_trivial(3).to_string() == "(*,(*,*))");
    CHECK(build_trivial(6).split_image() == std::set<unsigned>{1});
    std::mt19937_64 rng(5);
    Field f(12);
    for (unsigned n = 1; n <= 10; ++n) CHECK(validate(f, build_trivial(n), random_basis(f, n, rng())));
}

TEST_CASE("Cantor trees") {
    CHECK(build_cantor_tree(2).to_string() == "(*,*)");
    const ReductionTree t = build_cantor_tree(15);
    const auto& root = t[t.root()];
    CHECK(root.split == 8);
    CHECK(t[root.alpha].leaves == 8);
    CHECK(t[root.alpha].split == 4);
    CHECK(t[root.delta].leaves == 7);
    CHECK(t[root.delta].split == 4);
    CHECK(is_cantor_shaped(t));
    CHECK_FALSE(is_cantor_shaped(build_trivial(4)));
    Field f(16);
    for (unsigned n = 1; n <= 8; ++n) CHECK(validate(f, build_cantor_tree(n), construct_cantor(f, n)));
}

TEST_CASE("validity against a Cantor basis") {
    Field f(16);
    const BasisVector b = construct_cantor(f, 4);
    CHECK_FALSE(validate(f, ReductionTree::parse("(((*,*),*),*)"), b));
    CHECK_FALSE(validate(f, ReductionTree::parse("((*,(*,*)),*)"), b));
    CHECK(validate(f, ReductionTree::parse("((*,*),(*,*))"), b));
    CHECK(validate(f, ReductionTree::parse("(*,((*,*),*))"), b));
    CHECK(validate(f, ReductionTree::leaf(), BasisVector{FieldElement{0x1234}}));
    CHECK_FALSE(validate(f, build_trivial(3), b));
    CHECK_FALSE(validate(f, build_trivial(2), BasisVector{kZero, kOne}));
}

TEST_CASE("max trees") {
    CHECK(build_max_tree(7, {1}) == build_trivial(7));
    CHECK(build_max_tree(12, {1, 2, 4, 12}).vertex(0).split == 4);
    CHECK_THROWS_AS(build_max_tree(4, {2}), std::invalid_argument);
    Field f(12);
    const TowerSpec tower = parse_tower(f, "1-2-4-12");
    for (unsigned n = 1; n <= 12; ++n) CHECK(validate(f, build_max_tree(n, {1, 2, 4, 12}), construct_tower_basis(f, tower, n)));

    // the delta child never splits more coarsely than its parent
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<unsigned> degrees{1};
        for (int k = 0; k < 3; ++k) degrees.insert(1 + static_cast<unsigned>(rng() % 12));
        const unsigned n = 1 + static_cast<unsigned>(rng() % 20);
        const ReductionTree t = build_max_tree(n, degrees);
        CHECK(t.leaf_count() == n);
        for (VertexId v = 0; v < t.size(); ++v) {
            if (t.is_leaf(v) || t.is_leaf(t[v].delta)) continue;
            CHECK(t[t[v].delta].split <= t[v].split);
        }
    }
}

TEST_CASE("balanced trees") {
    CHECK(build_balanced_tree(5, {1}) == build_trivial(5));
    CHECK(build_balanced_tree(8, {1, 2, 4}).vertex(0).split == 4);
    Field f(12);
    const TowerSpec tower = parse_tower(f, "1-2-4-12");
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(validate(f, build_balanced_tree(n, {1, 2, 4, 12}), construct_tower_basis(f, tower, n)));
}

TEST_CASE("grafted trees") {
    for (unsigned n = 1; n <= 9; ++n) CHECK(graft_cantor_tree(1, n) == build_cantor_tree(n));
    CHECK(graft_cantor_tree(2, 4).to_string() == "((*,*),(*,*))");
    CHECK(graft_cantor_tree(2, 3).to_string() == "((*,*),*)");
    Field f(16);
    for (unsigned t : {1u, 2u}) {
        const BasisVector theta = subfield_basis_powers(f, 1, t);
        const BasisVector full = construct_gen_cantor(f, t == 1 ? 3 : 2, t, theta);
        for (unsigned n = 1; n <= 8; ++n) CHECK(validate(f, graft_cantor_tree(t, n), BasisVector(full.begin(), full.begin() + n)));
    }
    CHECK_THROWS(graft_cantor_tree(2, 4, {build_trivial(2)}));
}

TEST_CASE("tree enumeration") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(3).size() == 2);
    CHECK(enumerate_trees(4).size() == 5);
    CHECK(enumerate_trees(5).size() == 14);
    CHECK(enumerate_trees(6).size() == 42);
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(6)) {
        CHECK(t.leaf_count() == 6);
        seen.insert(t.to_string());
    }
    CHECK(seen.size() == 42);
    CHECK_THROWS(enumerate_trees(11));
}

TEST_CASE("tree strategies") {
    CHECK(build_tree_strategy("trivial", 4) == build_trivial(4));
    CHECK(build_tree_strategy("cantor", 6) == build_cantor_tree(6));
    CHECK(build_tree_strategy("max:1-2-4-12", 12) == build_max_tree(12, {1, 2, 4, 12}));
    CHECK(build_tree_strategy("max:1-2!-4!-12", 12) == build_max_tree(12, {1, 2, 4, 12}));
    CHECK(build_tree_strategy("balanced:1-3-12", 9) == build_balanced_tree(9, {1, 3, 12}));
    CHECK(build_tree_strategy("graft:2", 5) == graft_cantor_tree(2, 5));
    CHECK(build_tree_strategy("((*,*),*)", 3).to_string() == "((*,*),*)");
    CHECK_THROWS_AS(build_tree_strategy("((*,*),*)", 4), std::invalid_argument);
    CHECK_THROWS_AS(build_tree_strategy("bushy", 4), std::invalid_argument);
}

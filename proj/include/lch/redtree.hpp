/**************************************************************************
 * redtree.hpp
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
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lch/basisgen.hpp"
#include "lch/field.hpp"

namespace lch {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = ~VertexId{0};

/**
 * Full binary tree whose first child is the alpha child and second child the
 * delta child. Vertices are stored in preorder, so the root is vertex 0 and
 * every subtree occupies a contiguous id range.
 */
class ReductionTree {
public:
    struct Vertex {
        VertexId alpha = kNoVertex;
        VertexId delta = kNoVertex;
        unsigned leaves = 1;      // n_v
        unsigned split = 0;       // d_v, the alpha-subtree leaf count (0 at leaves)
        unsigned first_leaf = 0;  // index of the leftmost leaf below v
    };

    ReductionTree() : vertices_{Vertex{}} {}
    static ReductionTree leaf() { return {}; }
    static ReductionTree join(const ReductionTree& alpha, const ReductionTree& delta);

    /// Parses nested `(alpha,delta)` with `*` for leaves.
    static ReductionTree parse(std::string_view text);
    std::string to_string() const;

    VertexId root() const { return 0; }
    std::size_t size() const { return vertices_.size(); }
    unsigned leaf_count() const { return vertices_[0].leaves; }
    const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
    const Vertex& operator[](VertexId v) const { return vertices_[v]; }
    bool is_leaf(VertexId v) const { return vertices_[v].alpha == kNoVertex; }

    /// Splits d_v of all internal vertices.
    std::set<unsigned> split_image() const;

    friend bool operator==(const ReductionTree& a, const ReductionTree& b) { return a.to_string() == b.to_string(); }

private:
    std::vector<Vertex> vertices_;
};

bool validate(const Field& field, const ReductionTree& tree, const BasisVector& beta);

ReductionTree build_trivial(unsigned n);
ReductionTree build_cantor_tree(unsigned n);
ReductionTree build_max_tree(unsigned n, const std::set<unsigned>& degrees);
ReductionTree build_balanced_tree(unsigned n, const std::set<unsigned>& degrees);

/// Cantor-shaped outer tree over ceil(n/t) blocks, block i replaced by base_trees[i].
ReductionTree graft_cantor_tree(unsigned t, unsigned n, const std::vector<ReductionTree>& base_trees);
/// Same, with a trivial tree for every block.
ReductionTree graft_cantor_tree(unsigned t, unsigned n);

/// Every full binary tree with n leaves (n <= 10), each exactly once.
void for_each_tree(unsigned n, const std::function<void(const ReductionTree&)>& visit);
std::vector<ReductionTree> enumerate_trees(unsigned n);

/// True iff d_v = 2^{ceil(log2 n_v) - 1} at every internal vertex.
bool is_cantor_shaped(const ReductionTree& tree);

/// Builds a tree from `trivial`, `cantor`, `max:<tower>`, `balanced:<tower>`, `graft:<t>` or an explicit serialization.
ReductionTree build_tree_strategy(std::string_view strategy, unsigned n);

}  // namespace lch

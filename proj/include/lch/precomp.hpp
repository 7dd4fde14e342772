/**************************************************************************
 * precomp.hpp
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

#include <span>
#include <vector>

#include "lch/basisgen.hpp"
#include "lch/field.hpp"
#include "lch/redtree.hpp"

namespace lch {

/// Per-vertex bases: the root gets beta, alpha/delta children get alpha_of/delta_of of their parent.
std::vector<BasisVector> compute_vertex_bases(const Field& field, const ReductionTree& tree, const BasisVector& beta);

/**
 * Everything the transforms read besides the coefficients: vertex bases,
 * prefix sums of the suffix entries, shift-map values at those sums, and the
 * leading entries of the delta-child bases.
 *
 * Holds a pointer to the field, which must outlive the table.
 */
class PrecompTable {
public:
    PrecompTable(const Field& field, ReductionTree tree, BasisVector beta);

    const Field& field() const { return *field_; }
    const ReductionTree& tree() const { return tree_; }
    const BasisVector& basis() const { return bases_[0]; }
    unsigned dimension() const { return tree_.leaf_count(); }

    const BasisVector& vertex_basis(VertexId v) const { return bases_.at(v); }
    /// sigma_{v,i} = sum of b_{v,d_v+j} for j <= i, i < n_v - d_v.
    std::span<const FieldElement> sigma(VertexId v) const;
    /// Shift-map values at sigma_{v,i} for the d_v leaves of the alpha subtree.
    std::span<const FieldElement> phi_row(VertexId v, unsigned i) const {
        return {phi_table_.data() + phi_offset_[v] + std::size_t{i} * tree_[v].split, tree_[v].split};
    }
    FieldElement phi_entry(VertexId v, unsigned leaf_pos, unsigned i) const;
    std::size_t phi_entry_count() const { return phi_table_.size(); }

    FieldElement delta_head(VertexId v) const { return delta_head_.at(v); }
    FieldElement delta_head_inv(VertexId v) const { return delta_head_inv_.at(v); }
    FieldElement head_inv(VertexId v) const { return head_inv_.at(v); }

    /// Shift map of vertex v at leaf u (global leaf index) and shift lambda.
    FieldElement phi(VertexId v, unsigned u, FieldElement lambda) const;
    /// (phi_v(u, lambda)) for the leaves u of v in order.
    std::vector<FieldElement> phi_vector(VertexId v, FieldElement lambda) const;
    std::vector<FieldElement> initial_phi_vector(FieldElement lambda) const { return phi_vector(tree_.root(), lambda); }

private:
    void fill_phi_vector(VertexId v, FieldElement lambda, FieldElement* out) const;

    const Field* field_;
    ReductionTree tree_;
    std::vector<BasisVector> bases_;
    std::vector<std::size_t> sigma_offset_;
    std::vector<FieldElement> sigma_;
    std::vector<std::size_t> phi_offset_;
    std::vector<FieldElement> phi_table_;
    std::vector<FieldElement> delta_head_;
    std::vector<FieldElement> delta_head_inv_;
    std::vector<FieldElement> head_inv_;
};

}  // namespace lch

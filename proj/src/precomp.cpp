/**************************************************************************
 * precomp.cpp
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

#include "lch/precomp.hpp"

#include <stdexcept>

namespace lch {

std::vector<BasisVector> compute_vertex_bases(const Field& field, const ReductionTree& tree, const BasisVector& beta) {
    if (!validate(field, tree, beta)) throw std::invalid_argument("tree is not a reduction tree for the basis");
    std::vector<BasisVector> bases(tree.size());
    bases[tree.root()] = beta;
    // Preorder ids: a parent is always filled before its children.
    for (VertexId v = 0; v < tree.size(); ++v) {
        if (tree.is_leaf(v)) continue;
        const unsigned d = tree[v].split;
        bases[tree[v].alpha] = alpha_of(bases[v], d);
        bases[tree[v].delta] = delta_of(field, bases[v], d);
    }
    return bases;
}

PrecompTable::PrecompTable(const Field& field, ReductionTree tree, BasisVector beta)
    : field_(&field), tree_(std::move(tree)), bases_(compute_vertex_bases(field, tree_, beta)) {
    const std::size_t count = tree_.size();
    sigma_offset_.assign(count, 0);
    phi_offset_.assign(count, 0);
    delta_head_.assign(count, kOne);
    delta_head_inv_.assign(count, kOne);
    head_inv_.resize(count);
    for (VertexId v = 0; v < count; ++v) head_inv_[v] = field.inv(bases_[v][0]);

    for (VertexId v = 0; v < count; ++v) {
        if (tree_.is_leaf(v)) continue;
        const auto& node = tree_[v];
        delta_head_[v] = bases_[node.delta][0];
        delta_head_inv_[v] = field.inv(delta_head_[v]);

        sigma_offset_[v] = sigma_.size();
        FieldElement acc = kZero;
        for (unsigned i = node.split; i < node.leaves; ++i) {
            acc += bases_[v][i];
            sigma_.push_back(acc);
        }

        phi_offset_[v] = phi_table_.size();
        const unsigned rows = node.leaves - node.split;
        phi_table_.resize(phi_table_.size() + std::size_t{rows} * node.split);
        for (unsigned i = 0; i < rows; ++i)
            fill_phi_vector(node.alpha, sigma_[sigma_offset_[v] + i], phi_table_.data() + phi_offset_[v] + std::size_t{i} * node.split);
    }
}

std::span<const FieldElement> PrecompTable::sigma(VertexId v) const {
    const auto& node = tree_.vertex(v);
    if (tree_.is_leaf(v)) return {};
    return {sigma_.data() + sigma_offset_[v], node.leaves - node.split};
}

FieldElement PrecompTable::phi_entry(VertexId v, unsigned leaf_pos, unsigned i) const {
    const auto& node = tree_.vertex(v);
    if (tree_.is_leaf(v) || leaf_pos >= node.split || i >= node.leaves - node.split)
        throw std::out_of_range("phi table index out of range");
    return phi_row(v, i)[leaf_pos];
}

void PrecompTable::fill_phi_vector(VertexId v, FieldElement lambda, FieldElement* out) const {
    const Field& f = *field_;
    while (true) {
        const FieldElement scaled = f.mul(lambda, head_inv_[v]);
        if (tree_.is_leaf(v)) {
            *out = scaled;
            return;
        }
        const auto& node = tree_[v];
        fill_phi_vector(node.alpha, lambda, out);
        out += node.split;
        lambda = f.pow2k(scaled, node.split) + scaled;
        v = node.delta;
    }
}

std::vector<FieldElement> PrecompTable::phi_vector(VertexId v, FieldElement lambda) const {
    std::vector<FieldElement> out(tree_.vertex(v).leaves);
    fill_phi_vector(v, lambda, out.data());
    return out;
}

FieldElement PrecompTable::phi(VertexId v, unsigned u, FieldElement lambda) const {
    const Field& f = *field_;
    const auto* node = &tree_.vertex(v);
    if (u < node->first_leaf || u >= node->first_leaf + node->leaves) throw std::out_of_range("leaf is not below the vertex");
    while (!tree_.is_leaf(v)) {
        if (u < node->first_leaf + node->split) {
            v = node->alpha;
        } else {
            const FieldElement scaled = f.mul(lambda, head_inv_[v]);
            lambda = f.pow2k(scaled, node->split) + scaled;
            v = node->delta;
        }
        node = &tree_[v];
    }
    return f.mul(lambda, head_inv_[v]);
}

}  // namespace lch

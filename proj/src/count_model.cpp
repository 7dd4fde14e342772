/**************************************************************************
 * count_model.cpp
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

#include "lch/count_model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lch {

namespace {

std::uint64_t key(VertexId v, std::size_t c, std::size_t ell, unsigned b) {
    return (std::uint64_t{v} << 56) | (std::uint64_t{b} << 55) | (std::uint64_t{c} << 27) | ell;
}

constexpr OpCounter adds(std::uint64_t k) { return {k, 0}; }

}  // namespace

CountModel::CountModel(const PrecompTable& table, TransformOptions opts) : tree_(table.tree()), unit_head_(tree_.size(), false) {
    if (tree_.size() > 255 || table.dimension() > 26) throw std::invalid_argument("tree too large for the count model");
    for (VertexId v = 0; v < tree_.size(); ++v)
        if (!tree_.is_leaf(v)) unit_head_[v] = table.delta_head(v) == kOne && !opts.ignore_unit_head_guard;
}

OpCounter CountModel::taylor(std::size_t t, std::size_t ell) {
    if (t < 2) throw std::invalid_argument("Taylor expansion needs t >= 2");
    const std::size_t blocks = (ell + t - 1) / t;
    const unsigned levels = blocks <= 1 ? 0 : static_cast<unsigned>(std::bit_width(blocks - 1));
    OpCounter r;
    for (unsigned k = 0; k < levels; ++k) {
        const std::size_t half = (std::size_t{1} << k) * t;
        const std::size_t l1 = ell / (2 * half);
        const std::size_t l2 = ell - 2 * half * l1;
        r.additions += half * l1 + (l2 > half ? l2 - half : 0);
    }
    return r;
}

OpCounter CountModel::n2x_at(VertexId v, std::size_t ell) {
    if (ell <= 1) return {};
    const auto& node = tree_[v];
    if (node.alpha == kNoVertex) return {1, 1};
    const std::uint64_t k = key(v, 0, ell, 0);
    if (auto it = n2x_memo_.find(k); it != n2x_memo_.end()) return it->second;
    const std::size_t B = std::size_t{1} << node.split;
    const std::size_t l1 = (ell + B - 1) / B - 1;
    const std::size_t l2 = ell - B * l1;
    const std::size_t l2p = std::min(B, ell);
    OpCounter r = l1 * (n2x_at(node.alpha, B) + adds(node.split));
    r += n2x_at(node.alpha, l2);
    r += l2 * n2x_at(node.delta, l1 + 1);
    r += (l2p - l2) * n2x_at(node.delta, l1);
    n2x_memo_.emplace(k, r);
    return r;
}

OpCounter CountModel::l2x_at(VertexId v, std::size_t c, std::size_t ell, unsigned b) {
    const auto& node = tree_[v];
    if (node.alpha == kNoVertex) {
        if (c == 2 || (c == 1 && ell == 2 && b == 1)) return {2, 1};
        if (ell == 2) return {1, 1};
        return {};
    }
    const std::uint64_t k = key(v, c, ell, b);
    if (auto it = l2x_memo_.find(k); it != l2x_memo_.end()) return it->second;
    const std::size_t B = std::size_t{1} << node.split;
    const std::size_t c1 = c / B;
    const std::size_t c2 = c - B * c1;
    const std::size_t l1 = ell / B;
    const std::size_t l2 = ell - B * l1;
    const std::size_t l2p = std::min(B, ell);
    const unsigned bp = (b + c2 > 0) ? 1 : 0;
    const std::size_t s = std::min(c2, l2);
    const std::size_t t = std::max(c2, l2);
    const std::size_t rows = c1 + bp > 0 ? c1 + bp - 1 : 0;
    OpCounter r = rows * (l2x_at(node.alpha, B, B, 0) + adds(node.split));
    if (bp == 0) r += l2x_at(node.alpha, B, B, 0);
    r += (t - c2) * l2x_at(node.delta, c1, l1 + 1, bp);
    if (l2p > t) r += (l2p - t) * l2x_at(node.delta, c1, l1, bp);
    if (bp == 1) r += l2x_at(node.alpha, c2, l2p, b);
    r += s * l2x_at(node.delta, c1 + 1, l1 + 1, 0);
    r += (c2 - s) * l2x_at(node.delta, c1 + 1, l1, 0);
    l2x_memo_.emplace(k, r);
    return r;
}

OpCounter CountModel::x2l_at(VertexId v, std::size_t c, std::size_t ell) {
    const auto& node = tree_[v];
    if (node.alpha == kNoVertex) {
        if (ell == 2) return c == 2 ? OpCounter{2, 1} : OpCounter{1, 1};
        return {};
    }
    const std::uint64_t k = key(v, c, ell, 0);
    if (auto it = x2l_memo_.find(k); it != x2l_memo_.end()) return it->second;
    const std::size_t B = std::size_t{1} << node.split;
    const std::size_t c1 = (c + B - 1) / B - 1;
    const std::size_t c2 = c - B * c1;
    const std::size_t l1 = ell / B;
    const std::size_t l2 = ell - B * l1;
    const std::size_t l2p = std::min(B, ell);
    OpCounter r = l2 * x2l_at(node.delta, c1 + 1, l1 + 1);
    r += (l2p - l2) * x2l_at(node.delta, c1 + 1, l1);
    r += c1 * (x2l_at(node.alpha, B, l2p) + adds(node.split));
    r += x2l_at(node.alpha, c2, l2p);
    x2l_memo_.emplace(k, r);
    return r;
}

OpCounter CountModel::xm_at(VertexId v, std::size_t ell) {
    if (ell <= 2) return {};
    const auto& node = tree_[v];
    const std::uint64_t k = key(v, 0, ell, 0);
    if (auto it = xm_memo_.find(k); it != xm_memo_.end()) return it->second;
    const std::size_t B = std::size_t{1} << node.split;
    const std::size_t l1 = (ell + B - 1) / B - 1;
    const std::size_t l2 = ell - B * l1;
    const std::size_t l2p = std::min(B, ell);
    OpCounter r = l1 * xm_at(node.alpha, B);
    r += xm_at(node.alpha, l2);
    r += l2 * xm_at(node.delta, l1 + 1);
    r += (l2p - l2) * xm_at(node.delta, l1);
    if (l1 != 0 && !unit_head_[v]) r.multiplications += (l1 - 1) * (B + 1) + l2;
    r += taylor(B, ell);
    xm_memo_.emplace(k, r);
    return r;
}

}  // namespace lch

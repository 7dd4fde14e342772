/**************************************************************************
 * count_model.hpp
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
#include <unordered_map>

#include "lch/precomp.hpp"
#include "lch/transforms.hpp"

namespace lch {

/**
 * Operation counts of the kernels in transforms.hpp, evaluated from the same
 * loop structure without touching data. Counts never depend on coefficient
 * values, only on the tree, the parameters and which delta heads equal one,
 * so sub-results are memoized per (vertex, c, ell, b).
 *
 * Must agree exactly with the counters of an instrumented run.
 */
class CountModel {
public:
    explicit CountModel(const PrecompTable& table, TransformOptions opts = {});

    OpCounter n2x(std::size_t ell) { return n2x_at(0, ell); }
    OpCounter x2n(std::size_t ell) { return n2x_at(0, ell); }
    OpCounter l2x(std::size_t c, std::size_t ell, unsigned b) { return l2x_at(0, c, ell, b); }
    OpCounter x2l(std::size_t c, std::size_t ell) { return x2l_at(0, c, ell); }
    OpCounter x2m(std::size_t ell) { return xm_at(0, ell); }
    OpCounter m2x(std::size_t ell) { return xm_at(0, ell); }

    static OpCounter taylor(std::size_t t, std::size_t ell);

private:
    using Memo = std::unordered_map<std::uint64_t, OpCounter>;

    OpCounter n2x_at(VertexId v, std::size_t ell);
    OpCounter l2x_at(VertexId v, std::size_t c, std::size_t ell, unsigned b);
    OpCounter x2l_at(VertexId v, std::size_t c, std::size_t ell);
    OpCounter xm_at(VertexId v, std::size_t ell);

    const ReductionTree& tree_;
    std::vector<bool> unit_head_;
    Memo n2x_memo_, l2x_memo_, x2l_memo_, xm_memo_;
};

}  // namespace lch

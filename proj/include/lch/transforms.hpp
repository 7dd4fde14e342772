/**************************************************************************
 * transforms.hpp
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lch/basisgen.hpp"
#include "lch/field.hpp"
#include "lch/precomp.hpp"

namespace lch {

/// Field additions and multiplications performed on coefficient data and shift vectors.
struct OpCounter {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;

    OpCounter& operator+=(const OpCounter& o) {
        additions += o.additions;
        multiplications += o.multiplications;
        return *this;
    }
    friend OpCounter operator+(OpCounter a, const OpCounter& b) { return a += b; }
    friend OpCounter operator*(std::uint64_t k, const OpCounter& c) { return {k * c.additions, k * c.multiplications}; }
    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Strided window onto coefficient storage.
class StridedView {
public:
    StridedView() = default;
    StridedView(FieldElement* base, std::size_t stride, std::size_t size) : base_(base), stride_(stride), size_(size) {}
    explicit StridedView(std::span<FieldElement> s) : base_(s.data()), stride_(1), size_(s.size()) {}

    FieldElement& operator[](std::size_t i) const { return base_[i * stride_]; }
    std::size_t size() const { return size_; }
    std::size_t stride() const { return stride_; }

    /// Entries offset, offset+step, ..., count of them.
    StridedView sub(std::size_t offset, std::size_t step, std::size_t count) const {
        return {base_ + offset * stride_, stride_ * step, count};
    }

private:
    FieldElement* base_ = nullptr;
    std::size_t stride_ = 1;
    std::size_t size_ = 0;
};

/// Index of the lowest zero bit of i.
inline unsigned ruler_delta(std::uint64_t i) { return static_cast<unsigned>(std::countr_one(i)); }

struct TransformOptions {
    /// Count the block scalings of the monomial transforms even where the delta head equals one.
    bool ignore_unit_head_guard = false;
};

// Recursive kernels on a subtree. `phi` holds the shift-map values of the
// leaves below v; views are addressed exactly as the recursion prescribes.
void n2x(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t ell, StridedView a, OpCounter& ops);
void x2n(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t ell, StridedView a, OpCounter& ops);
void l2x(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t c, std::size_t ell, unsigned b,
         StridedView a, OpCounter& ops);
void x2l(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t c, std::size_t ell, StridedView a,
         OpCounter& ops);
void x2m(const PrecompTable& table, VertexId v, std::size_t ell, StridedView a, OpCounter& ops, TransformOptions opts = {});
void m2x(const PrecompTable& table, VertexId v, std::size_t ell, StridedView a, OpCounter& ops, TransformOptions opts = {});

void taylor_expand(std::size_t t, std::size_t ell, StridedView a, OpCounter& ops);
void taylor_inverse(std::size_t t, std::size_t ell, StridedView a, OpCounter& ops);

/// a_i <- w^i a_i.
void scale_by_powers(const Field& field, StridedView a, FieldElement w, OpCounter& ops);

// Whole-tree entry points.
OpCounter newton_to_lch(const PrecompTable& table, FieldElement lambda, std::span<FieldElement> coeffs);
OpCounter lch_to_newton(const PrecompTable& table, FieldElement lambda, std::span<FieldElement> coeffs);
/// inputs: f_0..f_{c-1}, h_c..h_{ell-1}. Returns h_0..h_{c-1}, followed by f_c when b = 1.
std::vector<FieldElement> lagrange_to_lch(const PrecompTable& table, FieldElement lambda, std::size_t c, std::size_t ell, unsigned b,
                                          std::span<const FieldElement> inputs, OpCounter& ops);
/// Values f_0..f_{c-1} of the polynomial with LCH coefficients h.
std::vector<FieldElement> lch_to_lagrange(const PrecompTable& table, FieldElement lambda, std::size_t c,
                                          std::span<const FieldElement> h, OpCounter& ops);
OpCounter twisted_lch_to_monomial(const PrecompTable& table, std::span<FieldElement> coeffs, TransformOptions opts = {});
OpCounter monomial_to_twisted_lch(const PrecompTable& table, std::span<FieldElement> coeffs, TransformOptions opts = {});

struct ConversionResult {
    std::vector<FieldElement> coeffs;
    OpCounter core;
    OpCounter twist;  // substitutions x -> b_0 x and back
};

/**
 * Converts the first ell coefficients between any two bases. A Lagrange
 * representation of a polynomial of degree < ell is its first ell values.
 * Shifts apply to the Newton and Lagrange sides.
 */
ConversionResult convert(const PrecompTable& table, BasisKind from, BasisKind to, FieldElement lambda, std::size_t ell,
                         std::span<const FieldElement> coeffs);

}  // namespace lch

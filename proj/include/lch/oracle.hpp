/**************************************************************************
 * oracle.hpp
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
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "lch/basisgen.hpp"
#include "lch/field.hpp"

namespace lch {

/// Monomial coefficients, lowest degree first, no trailing zeros.
struct DensePoly {
    std::vector<FieldElement> coeffs;

    DensePoly() = default;
    explicit DensePoly(std::vector<FieldElement> c) : coeffs(std::move(c)) { normalize(); }
    static DensePoly constant(FieldElement a) { return DensePoly({a}); }
    /// x + a
    static DensePoly linear(FieldElement a) { return DensePoly({a, kOne}); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    FieldElement operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : kZero; }
    void normalize() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }
    friend bool operator==(const DensePoly&, const DensePoly&) = default;
};

DensePoly poly_add(const DensePoly& p, const DensePoly& q);
DensePoly poly_mul(const Field& field, const DensePoly& p, const DensePoly& q);
DensePoly poly_scale(const Field& field, const DensePoly& p, FieldElement s);
FieldElement poly_eval(const Field& field, const DensePoly& p, FieldElement x0);
/// p(x + lambda); in characteristic two this is also p(x - lambda).
DensePoly poly_shift(const Field& field, const DensePoly& p, FieldElement lambda);
/// p(s x)
DensePoly poly_dilate(const Field& field, const DensePoly& p, FieldElement s);
/// p(q(x))
DensePoly poly_compose(const Field& field, const DensePoly& p, const DensePoly& q);

/// Explicit basis polynomial from its defining product (n <= 8).
DensePoly basis_poly(const Field& field, BasisKind kind, const BasisVector& beta, std::uint64_t i);

/// Dense row-major matrix over the field.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FieldElement> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, kZero) {}
    static Matrix identity(std::size_t n);
    FieldElement& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    FieldElement at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

std::vector<FieldElement> mat_vec(const Field& field, const Matrix& m, std::span<const FieldElement> x);
Matrix mat_mul(const Field& field, const Matrix& a, const Matrix& b);
/// Exact Gaussian elimination; throws std::domain_error if singular.
std::vector<FieldElement> solve(const Field& field, Matrix mat, std::vector<FieldElement> rhs);
Matrix solve_many(const Field& field, Matrix mat, Matrix rhs);

/**
 * Dense change-of-basis ground truth for one (basis, shift) pair. Columns of
 * basis matrices are monomial coefficients; Newton and Lagrange columns are
 * shifted by lambda, twisted LCH columns are X_i(b_0 x).
 */
class Oracle {
public:
    Oracle(const Field& field, BasisVector beta, FieldElement lambda);

    std::size_t length() const { return std::size_t{1} << beta_.size(); }
    const Matrix& basis_matrix(BasisKind kind);
    /// Full matrix taking `from` coordinates to `to` coordinates.
    const Matrix& conversion_matrix(BasisKind from, BasisKind to);

    std::vector<FieldElement> convert(BasisKind from, BasisKind to, std::size_t ell, std::span<const FieldElement> coeffs);
    std::vector<FieldElement> l2x_mixed(std::size_t c, std::size_t ell, unsigned b, std::span<const FieldElement> inputs);

private:
    const Field* field_;
    BasisVector beta_;
    FieldElement lambda_;
    std::map<BasisKind, Matrix> basis_;
    std::map<std::pair<BasisKind, BasisKind>, Matrix> conversion_;
};

std::vector<FieldElement> oracle_convert(const Field& field, BasisKind from, BasisKind to, const BasisVector& beta,
                                         FieldElement lambda, std::size_t ell, std::span<const FieldElement> coeffs);
/// inputs: f_0..f_{c-1}, h_c..h_{ell-1}; returns h_0..h_{c-1} and f_c when b = 1.
std::vector<FieldElement> oracle_l2x_mixed(const Field& field, const BasisVector& beta, FieldElement lambda, std::size_t c,
                                           std::size_t ell, unsigned b, std::span<const FieldElement> inputs);

struct BoundParams {
    std::uint64_t ell = 1;
    std::uint64_t c = 0;
    unsigned b = 0;
    unsigned n = 0;
    std::uint64_t t = 2;
};

/// Closed-form operation-count bounds, floored to integers. Throws std::invalid_argument on unknown ids.
std::uint64_t bound(std::string_view id, const BoundParams& p);
const std::vector<std::string_view>& bound_ids();

}  // namespace lch

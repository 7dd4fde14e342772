/**************************************************************************
 * oracle.cpp
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

#include "lch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace lch {

namespace {

constexpr std::size_t kMaxOracleDimension = 8;

std::int64_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<std::int64_t>(std::bit_width(x - 1)); }

// min{k : x <= 2^(2^k)}, i.e. ceil(log2(log2 x)) for x >= 2
std::int64_t ceil_log2_log2(std::uint64_t x) {
    std::int64_t k = 0;
    while (k < 6 && x > (std::uint64_t{1} << (std::uint64_t{1} << k))) ++k;
    return k;
}

// floor(num / den) for den > 0
std::int64_t floor_div(std::int64_t num, std::int64_t den) { return num >= 0 ? num / den : -((-num + den - 1) / den); }

std::uint64_t clamp_nonneg(std::int64_t v) { return v < 0 ? 0 : static_cast<std::uint64_t>(v); }

std::vector<FieldElement> points(const BasisVector& beta) {
    std::vector<FieldElement> out(std::size_t{1} << beta.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = enumerate_point(beta, i);
    return out;
}

DensePoly newton_poly(const Field& field, const std::vector<FieldElement>& pts, std::size_t i) {
    DensePoly p = DensePoly::constant(kOne);
    FieldElement denom = kOne;
    for (std::size_t j = 0; j < i; ++j) {
        p = poly_mul(field, p, DensePoly::linear(pts[j]));
        denom = field.mul(denom, pts[i] + pts[j]);
    }
    return poly_scale(field, p, field.inv(denom));
}

}  // namespace

DensePoly poly_add(const DensePoly& p, const DensePoly& q) {
    std::vector<FieldElement> c(std::max(p.coeffs.size(), q.coeffs.size()), kZero);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
    return DensePoly(std::move(c));
}

DensePoly poly_mul(const Field& field, const DensePoly& p, const DensePoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<FieldElement> c(p.coeffs.size() + q.coeffs.size() - 1, kZero);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += field.mul(p.coeffs[i], q.coeffs[j]);
    return DensePoly(std::move(c));
}

DensePoly poly_scale(const Field& field, const DensePoly& p, FieldElement s) {
    std::vector<FieldElement> c = p.coeffs;
    for (auto& x : c) x = field.mul(x, s);
    return DensePoly(std::move(c));
}

FieldElement poly_eval(const Field& field, const DensePoly& p, FieldElement x0) {
    FieldElement acc = kZero;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = field.mul(acc, x0) + p.coeffs[i];
    return acc;
}

DensePoly poly_shift(const Field& field, const DensePoly& p, FieldElement lambda) {
    return poly_compose(field, p, DensePoly::linear(lambda));
}

DensePoly poly_dilate(const Field& field, const DensePoly& p, FieldElement s) {
    std::vector<FieldElement> c = p.coeffs;
    FieldElement w = kOne;
    for (auto& x : c) {
        x = field.mul(x, w);
        w = field.mul(w, s);
    }
    return DensePoly(std::move(c));
}

DensePoly poly_compose(const Field& field, const DensePoly& p, const DensePoly& q) {
    DensePoly acc;
    for (std::size_t i = p.coeffs.size(); i-- > 0;)
        acc = poly_add(poly_mul(field, acc, q), DensePoly::constant(p.coeffs[i]));
    return acc;
}

DensePoly basis_poly(const Field& field, BasisKind kind, const BasisVector& beta, std::uint64_t i) {
    if (beta.empty() || beta.size() > kMaxOracleDimension) throw std::invalid_argument("oracle supports dimensions 1..8");
    const auto pts = points(beta);
    if (i >= pts.size()) throw std::out_of_range("basis index out of range");
    switch (kind) {
        case BasisKind::Monomial: {
            std::vector<FieldElement> c(i + 1, kZero);
            c[i] = kOne;
            return DensePoly(std::move(c));
        }
        case BasisKind::Newton: return newton_poly(field, pts, i);
        case BasisKind::Lagrange: {
            DensePoly p = DensePoly::constant(kOne);
            FieldElement denom = kOne;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (j == i) continue;
                p = poly_mul(field, p, DensePoly::linear(pts[j]));
                denom = field.mul(denom, pts[i] + pts[j]);
            }
            return poly_scale(field, p, field.inv(denom));
        }
        case BasisKind::LCH:
        case BasisKind::TwistedLCH: {
            DensePoly p = DensePoly::constant(kOne);
            for (std::size_t k = 0; k < beta.size(); ++k)
                if ((i >> k) & 1) p = poly_mul(field, p, newton_poly(field, pts, std::size_t{1} << k));
            return kind == BasisKind::LCH ? p : poly_dilate(field, p, beta[0]);
        }
    }
    throw std::invalid_argument("unknown basis kind");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = kOne;
    return m;
}

std::vector<FieldElement> mat_vec(const Field& field, const Matrix& m, std::span<const FieldElement> x) {
    if (x.size() != m.cols) throw std::invalid_argument("dimension mismatch");
    std::vector<FieldElement> y(m.rows, kZero);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) y[r] += field.mul(m.at(r, c), x[c]);
    return y;
}

Matrix mat_mul(const Field& field, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const FieldElement x = a.at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols; ++c) out.at(r, c) += field.mul(x, b.at(k, c));
        }
    return out;
}

Matrix solve_many(const Field& field, Matrix mat, Matrix rhs) {
    if (mat.rows != mat.cols || rhs.rows != mat.rows) throw std::invalid_argument("solve needs a square system");
    const std::size_t n = mat.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && mat.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(mat.at(piv, c), mat.at(col, c));
            for (std::size_t c = 0; c < rhs.cols; ++c) std::swap(rhs.at(piv, c), rhs.at(col, c));
        }
        const FieldElement inv = field.inv(mat.at(col, col));
        for (std::size_t c = 0; c < n; ++c) mat.at(col, c) = field.mul(mat.at(col, c), inv);
        for (std::size_t c = 0; c < rhs.cols; ++c) rhs.at(col, c) = field.mul(rhs.at(col, c), inv);
        for (std::size_t r = 0; r < n; ++r) {
            const FieldElement f = mat.at(r, col);
            if (r == col || f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) mat.at(r, c) += field.mul(f, mat.at(col, c));
            for (std::size_t c = 0; c < rhs.cols; ++c) rhs.at(r, c) += field.mul(f, rhs.at(col, c));
        }
    }
    return rhs;
}

std::vector<FieldElement> solve(const Field& field, Matrix mat, std::vector<FieldElement> rhs) {
    Matrix b(rhs.size(), 1);
    b.data = std::move(rhs);
    return solve_many(field, std::move(mat), std::move(b)).data;
}

Oracle::Oracle(const Field& field, BasisVector beta, FieldElement lambda) : field_(&field), beta_(std::move(beta)), lambda_(lambda) {
    if (beta_.empty() || beta_.size() > kMaxOracleDimension) throw std::invalid_argument("oracle supports dimensions 1..8");
    if (!is_independent(beta_)) throw std::invalid_argument("oracle basis is dependent");
}

const Matrix& Oracle::basis_matrix(BasisKind kind) {
    auto it = basis_.find(kind);
    if (it != basis_.end()) return it->second;
    const std::size_t n = length();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        DensePoly p = basis_poly(*field_, kind, beta_, i);
        if (kind == BasisKind::Newton || kind == BasisKind::Lagrange) p = poly_shift(*field_, p, lambda_);
        for (std::size_t r = 0; r < n; ++r) m.at(r, i) = p[r];
    }
    return basis_.emplace(kind, std::move(m)).first->second;
}

const Matrix& Oracle::conversion_matrix(BasisKind from, BasisKind to) {
    const auto key = std::make_pair(from, to);
    auto it = conversion_.find(key);
    if (it != conversion_.end()) return it->second;
    Matrix m = solve_many(*field_, basis_matrix(to), basis_matrix(from));
    return conversion_.emplace(key, std::move(m)).first->second;
}

std::vector<FieldElement> Oracle::convert(BasisKind from, BasisKind to, std::size_t ell, std::span<const FieldElement> coeffs) {
    const std::size_t n = length();
    if (ell < 1 || ell > n || coeffs.size() != ell) throw std::invalid_argument("oracle conversion needs ell coefficients, 1 <= ell <= 2^n");
    std::vector<FieldElement> x(coeffs.begin(), coeffs.end());
    if (from == BasisKind::Lagrange && ell < n && to != BasisKind::Lagrange) {
        x = l2x_mixed(ell, ell, 0, x);
        from = BasisKind::LCH;
    }
    if (from == to) return x;
    x.resize(n, kZero);
    auto y = mat_vec(*field_, conversion_matrix(from, to), x);
    y.resize(ell);
    return y;
}

std::vector<FieldElement> Oracle::l2x_mixed(std::size_t c, std::size_t ell, unsigned b, std::span<const FieldElement> inputs) {
    const std::size_t n = length();
    if (ell < 1 || ell > n || c > ell || b > 1 || b + c < 1 || b + c > n) throw std::invalid_argument("invalid (c, ell, b)");
    if (inputs.size() != ell) throw std::invalid_argument("mixed system needs ell known values");
    const Matrix& xm = basis_matrix(BasisKind::LCH);
    const Matrix& lm = basis_matrix(BasisKind::Lagrange);
    // Unknowns: h_0..h_{c-1}, then f_c..f_{n-1}.
    Matrix sys(n, n);
    std::vector<FieldElement> rhs(n, kZero);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < c; ++i) sys.at(r, i) = xm.at(r, i);
        for (std::size_t j = c; j < n; ++j) sys.at(r, j) = lm.at(r, j);
        for (std::size_t j = 0; j < c; ++j) rhs[r] += field_->mul(lm.at(r, j), inputs[j]);
        for (std::size_t i = c; i < ell; ++i) rhs[r] += field_->mul(xm.at(r, i), inputs[i]);
    }
    auto sol = solve(*field_, std::move(sys), std::move(rhs));
    sol.resize(c + b);
    return sol;
}

std::vector<FieldElement> oracle_convert(const Field& field, BasisKind from, BasisKind to, const BasisVector& beta,
                                         FieldElement lambda, std::size_t ell, std::span<const FieldElement> coeffs) {
    return Oracle(field, beta, lambda).convert(from, to, ell, coeffs);
}

std::vector<FieldElement> oracle_l2x_mixed(const Field& field, const BasisVector& beta, FieldElement lambda, std::size_t c,
                                           std::size_t ell, unsigned b, std::span<const FieldElement> inputs) {
    return Oracle(field, beta, lambda).l2x_mixed(c, ell, b, inputs);
}

const std::vector<std::string_view>& bound_ids() {
    static const std::vector<std::string_view> ids{
        "newton_add",  "newton_mul", "lagrange_add",        "lagrange_mul", "monomial_add", "monomial_mul", "cantor_newton_add",
        "cantor_monomial_add", "taylor_add", "l2x_add", "l2x_mul",      "x2l_add",      "x2l_mul",      "zero"};
    return ids;
}

std::uint64_t bound(std::string_view id, const BoundParams& p) {
    const auto ell = static_cast<std::int64_t>(p.ell);
    const std::int64_t half = ell / 2;
    const std::int64_t lg = ceil_log2(p.ell);
    const auto n = static_cast<std::int64_t>(p.n);

    auto lagrange_form = [&](std::uint64_t cb, bool adds) {
        if (n < 1) throw std::invalid_argument("Lagrange bounds need the dimension n >= 1");
        const auto k = static_cast<std::int64_t>(cb);
        const std::int64_t lk = ceil_log2(cb);
        const std::int64_t factor = adds ? 3 * lk - 1 : lk - 1;
        const std::int64_t recursive = floor_div((k - 1) * factor, 2) + ell - 1;
        const std::int64_t whole = adds ? (std::int64_t{1} << (n - 1)) * (3 * n - 2) + 1 : (std::int64_t{1} << (n - 1)) * n;
        return clamp_nonneg(std::min(recursive, whole));
    };

    if (id == "newton_add") return clamp_nonneg(ell * (lg - 1) + 1);
    if (id == "newton_mul") return clamp_nonneg(half * lg);
    if (id == "lagrange_add") return clamp_nonneg(half * (3 * lg + 1));
    if (id == "lagrange_mul") return clamp_nonneg(half * (lg + 1));
    if (id == "monomial_add") return clamp_nonneg(half * (lg * (lg - 1) / 2));
    if (id == "monomial_mul") return clamp_nonneg(half * (3 * lg - 4) + 1);
    if (id == "cantor_newton_add") return clamp_nonneg(floor_div((3 * ell - 2) * lg, 4));
    if (id == "cantor_monomial_add") return clamp_nonneg(half * lg * ceil_log2_log2(std::max<std::uint64_t>(p.ell, 2)));
    if (id == "taylor_add") {
        if (p.t < 2) throw std::invalid_argument("Taylor bound needs t >= 2");
        return clamp_nonneg(half * ceil_log2((p.ell + p.t - 1) / p.t));
    }
    if (id == "l2x_add") return lagrange_form(p.c + p.b, true);
    if (id == "l2x_mul") return lagrange_form(p.c + p.b, false);
    if (id == "x2l_add") return lagrange_form(p.c, true);
    if (id == "x2l_mul") return lagrange_form(p.c, false);
    if (id == "zero") return 0;
    throw std::invalid_argument("unknown bound id '" + std::string(id) + "'");
}

}  // namespace lch

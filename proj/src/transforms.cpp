/**************************************************************************
 * transforms.cpp
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

#include "lch/transforms.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace lch {

namespace {

using Shift = std::array<FieldElement, 32>;

unsigned ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

class Kernel {
public:
    Kernel(const PrecompTable& table, OpCounter& ops, TransformOptions opts = {})
        : table_(table), field_(table.field()), tree_(table.tree()), ops_(ops), opts_(opts) {}

    void n2x(VertexId v, const FieldElement* phi, std::size_t ell, StridedView a) {
        if (ell <= 1) return;
        const auto& node = tree_[v];
        if (node.alpha == kNoVertex) {
            leaf_axpy(a, phi[0]);
            return;
        }
        const std::size_t B = std::size_t{1} << node.split;
        const std::size_t l1 = (ell + B - 1) / B - 1;
        const std::size_t l2 = ell - B * l1;
        const std::size_t l2p = std::min(B, ell);
        Shift mu;
        std::copy(phi, phi + node.split, mu.begin());
        const FieldElement* nu = phi + node.split;
        for (std::size_t i = 0; i < l1; ++i) {
            n2x(node.alpha, mu.data(), B, a.sub(B * i, 1, B));
            update(v, mu, ruler_delta(i));
        }
        n2x(node.alpha, mu.data(), l2, a.sub(B * l1, 1, l2));
        for (std::size_t j = 0; j < l2; ++j) n2x(node.delta, nu, l1 + 1, a.sub(j, B, l1 + 1));
        for (std::size_t j = l2; j < l2p; ++j) n2x(node.delta, nu, l1, a.sub(j, B, l1));
    }

    void x2n(VertexId v, const FieldElement* phi, std::size_t ell, StridedView a) {
        if (ell <= 1) return;
        const auto& node = tree_[v];
        if (node.alpha == kNoVertex) {
            leaf_axpy(a, phi[0]);
            return;
        }
        const std::size_t B = std::size_t{1} << node.split;
        const std::size_t l1 = (ell + B - 1) / B - 1;
        const std::size_t l2 = ell - B * l1;
        const std::size_t l2p = std::min(B, ell);
        const FieldElement* nu = phi + node.split;
        for (std::size_t j = 0; j < l2; ++j) x2n(node.delta, nu, l1 + 1, a.sub(j, B, l1 + 1));
        for (std::size_t j = l2; j < l2p; ++j) x2n(node.delta, nu, l1, a.sub(j, B, l1));
        Shift mu;
        std::copy(phi, phi + node.split, mu.begin());
        for (std::size_t i = 0; i < l1; ++i) {
            x2n(node.alpha, mu.data(), B, a.sub(B * i, 1, B));
            update(v, mu, ruler_delta(i));
        }
        x2n(node.alpha, mu.data(), l2, a.sub(B * l1, 1, l2));
    }

    void l2x(VertexId v, const FieldElement* phi, std::size_t c, std::size_t ell, unsigned b, StridedView a) {
        const auto& node = tree_[v];
        if (node.alpha == kNoVertex) {
            l2x_leaf(phi[0], c, ell, b, a);
            return;
        }
        const std::size_t B = std::size_t{1} << node.split;
        const std::size_t rows = std::size_t{1} << (node.leaves - node.split);
        const std::size_t c1 = c / B;
        const std::size_t c2 = c - B * c1;
        const std::size_t l1 = ell / B;
        const std::size_t l2 = ell - B * l1;
        const std::size_t l2p = std::min(B, ell);
        const unsigned bp = (b + c2 > 0) ? 1 : 0;
        const std::size_t s = std::min(c2, l2);
        const std::size_t t = std::max(c2, l2);
        Shift mu;
        std::copy(phi, phi + node.split, mu.begin());
        const FieldElement* nu = phi + node.split;
        for (std::size_t i = 0; i + 1 < c1 + bp; ++i) {
            l2x(node.alpha, mu.data(), B, B, 0, a.sub(B * i, 1, B));
            update(v, mu, ruler_delta(i));
        }
        if (bp == 0) l2x(node.alpha, mu.data(), B, B, 0, a.sub(B * (c1 - 1), 1, B));
        for (std::size_t j = c2; j < t; ++j) l2x(node.delta, nu, c1, l1 + 1, bp, a.sub(j, B, rows));
        for (std::size_t j = t; j < l2p; ++j) l2x(node.delta, nu, c1, l1, bp, a.sub(j, B, rows));
        if (bp == 1) l2x(node.alpha, mu.data(), c2, l2p, b, a.sub(B * c1, 1, B));
        for (std::size_t j = 0; j < s; ++j) l2x(node.delta, nu, c1 + 1, l1 + 1, 0, a.sub(j, B, rows));
        for (std::size_t j = s; j < c2; ++j) l2x(node.delta, nu, c1 + 1, l1, 0, a.sub(j, B, rows));
    }

    void x2l(VertexId v, const FieldElement* phi, std::size_t c, std::size_t ell, StridedView a) {
        const auto& node = tree_[v];
        if (node.alpha == kNoVertex) {
            x2l_leaf(phi[0], c, ell, a);
            return;
        }
        const std::size_t B = std::size_t{1} << node.split;
        const std::size_t rows = std::size_t{1} << (node.leaves - node.split);
        const std::size_t c1 = (c + B - 1) / B - 1;
        const std::size_t c2 = c - B * c1;
        const std::size_t l1 = ell / B;
        const std::size_t l2 = ell - B * l1;
        const std::size_t l2p = std::min(B, ell);
        const FieldElement* nu = phi + node.split;
        for (std::size_t j = 0; j < l2; ++j) x2l(node.delta, nu, c1 + 1, l1 + 1, a.sub(j, B, rows));
        for (std::size_t j = l2; j < l2p; ++j) x2l(node.delta, nu, c1 + 1, l1, a.sub(j, B, rows));
        Shift mu;
        std::copy(phi, phi + node.split, mu.begin());
        for (std::size_t i = 0; i < c1; ++i) {
            x2l(node.alpha, mu.data(), B, l2p, a.sub(B * i, 1, B));
            update(v, mu, ruler_delta(i));
        }
        x2l(node.alpha, mu.data(), c2, l2p, a.sub(B * c1, 1, B));
    }

    void x2m(VertexId v, std::size_t ell, StridedView a) {
        if (ell <= 2) return;
        const auto& node = tree_[v];
        const std::size_t B = std::size_t{1} << node.split;
        const std::size_t l1 = (ell + B - 1) / B - 1;
        const std::size_t l2 = ell - B * l1;
        const std::size_t l2p = std::min(B, ell);
        for (std::size_t i = 0; i < l1; ++i) x2m(node.alpha, B, a.sub(B * i, 1, B));
        x2m(node.alpha, l2, a.sub(B * l1, 1, l2));
        for (std::size_t j = 0; j < l2; ++j) x2m(node.delta, l1 + 1, a.sub(j, B, l1 + 1));
        for (std::size_t j = l2; j < l2p; ++j) x2m(node.delta, l1, a.sub(j, B, l1));
        scale_blocks(table_.delta_head_inv(v), B, l1, l2, a);
        taylor_inverse(B, ell, a, ops_);
    }

    void m2x(VertexId v, std::size_t ell, StridedView a) {
        if (ell <= 2) return;
        const auto& node = tree_[v];
        const std::size_t B = std::size_t{1} << node.split;
        const std::size_t l1 = (ell + B - 1) / B - 1;
        const std::size_t l2 = ell - B * l1;
        const std::size_t l2p = std::min(B, ell);
        taylor_expand(B, ell, a, ops_);
        scale_blocks(table_.delta_head(v), B, l1, l2, a);
        for (std::size_t j = 0; j < l2; ++j) m2x(node.delta, l1 + 1, a.sub(j, B, l1 + 1));
        for (std::size_t j = l2; j < l2p; ++j) m2x(node.delta, l1, a.sub(j, B, l1));
        for (std::size_t i = 0; i < l1; ++i) m2x(node.alpha, B, a.sub(B * i, 1, B));
        m2x(node.alpha, l2, a.sub(B * l1, 1, l2));
    }

private:
    FieldElement mul(FieldElement x, FieldElement y) {
        ++ops_.multiplications;
        return field_.mul(x, y);
    }
    FieldElement add(FieldElement x, FieldElement y) {
        ++ops_.additions;
        return x + y;
    }

    // a0 <- a0 + phi a1
    void leaf_axpy(StridedView a, FieldElement phi) { a[0] = add(a[0], mul(phi, a[1])); }

    void update(VertexId v, Shift& mu, unsigned delta) {
        const auto row = table_.phi_row(v, delta);
        for (std::size_t u = 0; u < row.size(); ++u) mu[u] += row[u];
        ops_.additions += row.size();
    }

    void l2x_leaf(FieldElement phi, std::size_t c, std::size_t ell, unsigned b, StridedView a) {
        if (c == 2) {
            a[1] = add(a[0], a[1]);
            a[0] = add(a[0], mul(phi, a[1]));
        } else if (c == 1 && ell == 2 && b == 1) {
            const FieldElement w = mul(phi, a[1]);
            a[1] = add(a[0], a[1]);
            a[0] = add(a[0], w);
        } else if (ell == 2) {
            leaf_axpy(a, phi);
        } else if (c == 1 && ell == 1 && b == 1) {
            a[1] = a[0];
        }
    }

    void x2l_leaf(FieldElement phi, std::size_t c, std::size_t ell, StridedView a) {
        if (ell == 2) {
            leaf_axpy(a, phi);
            if (c == 2) a[1] = add(a[0], a[1]);
        } else if (c == 2) {
            a[1] = a[0];
        }
    }

    void scale_blocks(FieldElement factor, std::size_t B, std::size_t l1, std::size_t l2, StridedView a) {
        if (l1 == 0 || (factor == kOne && !opts_.ignore_unit_head_guard)) return;
        FieldElement w = factor;
        for (std::size_t i = 1; i < l1; ++i) {
            for (std::size_t j = 0; j < B; ++j) a[B * i + j] = mul(w, a[B * i + j]);
            w = mul(w, factor);
        }
        for (std::size_t j = 0; j < l2; ++j) a[B * l1 + j] = mul(w, a[B * l1 + j]);
    }

    const PrecompTable& table_;
    const Field& field_;
    const ReductionTree& tree_;
    OpCounter& ops_;
    TransformOptions opts_;
};

std::size_t full_length(const PrecompTable& table) { return std::size_t{1} << table.dimension(); }

void check_ell(std::size_t ell, std::size_t limit) {
    if (ell < 1 || ell > limit) throw std::out_of_range("ell=" + std::to_string(ell) + " outside 1.." + std::to_string(limit));
}

void check_vertex(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t ell, std::size_t len) {
    const auto& node = table.tree().vertex(v);
    if (phi.size() != node.leaves) throw std::invalid_argument("shift vector length does not match the subtree");
    check_ell(ell, std::size_t{1} << node.leaves);
    if (len < ell) throw std::invalid_argument("view shorter than ell");
}

void check_full(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t len) {
    const auto& node = table.tree().vertex(v);
    if (phi.size() != node.leaves) throw std::invalid_argument("shift vector length does not match the subtree");
    if (len != (std::size_t{1} << node.leaves)) throw std::invalid_argument("buffer must span the whole subspace");
}

}  // namespace

void n2x(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t ell, StridedView a, OpCounter& ops) {
    check_vertex(table, v, phi, ell, a.size());
    Kernel(table, ops).n2x(v, phi.data(), ell, a);
}

void x2n(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t ell, StridedView a, OpCounter& ops) {
    check_vertex(table, v, phi, ell, a.size());
    Kernel(table, ops).x2n(v, phi.data(), ell, a);
}

void l2x(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t c, std::size_t ell, unsigned b,
         StridedView a, OpCounter& ops) {
    check_full(table, v, phi, a.size());
    check_ell(ell, a.size());
    if (c > ell || b > 1 || b + c < 1 || b + c > a.size()) throw std::out_of_range("invalid (c, ell, b) for Lagrange input");
    Kernel(table, ops).l2x(v, phi.data(), c, ell, b, a);
}

void x2l(const PrecompTable& table, VertexId v, std::span<const FieldElement> phi, std::size_t c, std::size_t ell, StridedView a,
         OpCounter& ops) {
    check_full(table, v, phi, a.size());
    check_ell(ell, a.size());
    check_ell(c, a.size());
    Kernel(table, ops).x2l(v, phi.data(), c, ell, a);
}

void x2m(const PrecompTable& table, VertexId v, std::size_t ell, StridedView a, OpCounter& ops, TransformOptions opts) {
    check_ell(ell, std::size_t{1} << table.tree().vertex(v).leaves);
    if (a.size() < ell) throw std::invalid_argument("view shorter than ell");
    Kernel(table, ops, opts).x2m(v, ell, a);
}

void m2x(const PrecompTable& table, VertexId v, std::size_t ell, StridedView a, OpCounter& ops, TransformOptions opts) {
    check_ell(ell, std::size_t{1} << table.tree().vertex(v).leaves);
    if (a.size() < ell) throw std::invalid_argument("view shorter than ell");
    Kernel(table, ops, opts).m2x(v, ell, a);
}

void taylor_expand(std::size_t t, std::size_t ell, StridedView a, OpCounter& ops) {
    if (t < 2) throw std::invalid_argument("Taylor expansion needs t >= 2");
    const unsigned levels = ceil_log2((ell + t - 1) / t);
    for (unsigned k = levels; k-- > 0;) {
        const std::size_t half = (std::size_t{1} << k) * t;
        const std::size_t shift = std::size_t{1} << k;
        const std::size_t l1 = ell / (2 * half);
        const std::size_t l2 = ell - 2 * half * l1;
        for (std::size_t i = 0; i < l1; ++i) {
            const std::size_t base = 2 * half * i;
            for (std::size_t j = half; j-- > 0;) a[base + shift + j] += a[base + half + j];
        }
        ops.additions += half * l1;
        if (l2 > half) {
            const std::size_t base = 2 * half * l1;
            for (std::size_t j = l2 - half; j-- > 0;) a[base + shift + j] += a[base + half + j];
            ops.additions += l2 - half;
        }
    }
}

void taylor_inverse(std::size_t t, std::size_t ell, StridedView a, OpCounter& ops) {
    if (t < 2) throw std::invalid_argument("Taylor expansion needs t >= 2");
    const unsigned levels = ceil_log2((ell + t - 1) / t);
    for (unsigned k = 0; k < levels; ++k) {
        const std::size_t half = (std::size_t{1} << k) * t;
        const std::size_t shift = std::size_t{1} << k;
        const std::size_t l1 = ell / (2 * half);
        const std::size_t l2 = ell - 2 * half * l1;
        for (std::size_t i = 0; i < l1; ++i) {
            const std::size_t base = 2 * half * i;
            for (std::size_t j = 0; j < half; ++j) a[base + shift + j] += a[base + half + j];
        }
        ops.additions += half * l1;
        if (l2 > half) {
            const std::size_t base = 2 * half * l1;
            for (std::size_t j = 0; j < l2 - half; ++j) a[base + shift + j] += a[base + half + j];
            ops.additions += l2 - half;
        }
    }
}

void scale_by_powers(const Field& field, StridedView a, FieldElement w, OpCounter& ops) {
    if (w.is_zero()) throw std::domain_error("scaling by powers of zero");
    if (w == kOne || a.size() < 2) return;
    FieldElement p = w;
    a[1] = field.mul(p, a[1]);
    ++ops.multiplications;
    for (std::size_t i = 2; i < a.size(); ++i) {
        p = field.mul(p, w);
        a[i] = field.mul(p, a[i]);
        ops.multiplications += 2;
    }
}

OpCounter newton_to_lch(const PrecompTable& table, FieldElement lambda, std::span<FieldElement> coeffs) {
    OpCounter ops;
    const auto phi = table.initial_phi_vector(lambda);
    n2x(table, table.tree().root(), phi, coeffs.size(), StridedView(coeffs), ops);
    return ops;
}

OpCounter lch_to_newton(const PrecompTable& table, FieldElement lambda, std::span<FieldElement> coeffs) {
    OpCounter ops;
    const auto phi = table.initial_phi_vector(lambda);
    x2n(table, table.tree().root(), phi, coeffs.size(), StridedView(coeffs), ops);
    return ops;
}

std::vector<FieldElement> lagrange_to_lch(const PrecompTable& table, FieldElement lambda, std::size_t c, std::size_t ell, unsigned b,
                                          std::span<const FieldElement> inputs, OpCounter& ops) {
    if (inputs.size() != ell) throw std::invalid_argument("Lagrange input must hold ell values");
    std::vector<FieldElement> buf(full_length(table), kZero);
    std::copy(inputs.begin(), inputs.end(), buf.begin());
    const auto phi = table.initial_phi_vector(lambda);
    l2x(table, table.tree().root(), phi, c, ell, b, StridedView(buf), ops);
    buf.resize(c + b);
    return buf;
}

std::vector<FieldElement> lch_to_lagrange(const PrecompTable& table, FieldElement lambda, std::size_t c,
                                          std::span<const FieldElement> h, OpCounter& ops) {
    std::vector<FieldElement> buf(full_length(table), kZero);
    check_ell(h.size(), buf.size());
    std::copy(h.begin(), h.end(), buf.begin());
    const auto phi = table.initial_phi_vector(lambda);
    x2l(table, table.tree().root(), phi, c, h.size(), StridedView(buf), ops);
    buf.resize(c);
    return buf;
}

OpCounter twisted_lch_to_monomial(const PrecompTable& table, std::span<FieldElement> coeffs, TransformOptions opts) {
    OpCounter ops;
    x2m(table, table.tree().root(), coeffs.size(), StridedView(coeffs), ops, opts);
    return ops;
}

OpCounter monomial_to_twisted_lch(const PrecompTable& table, std::span<FieldElement> coeffs, TransformOptions opts) {
    OpCounter ops;
    m2x(table, table.tree().root(), coeffs.size(), StridedView(coeffs), ops, opts);
    return ops;
}

namespace {

void to_lch(const PrecompTable& table, BasisKind from, FieldElement lambda, std::vector<FieldElement>& a, ConversionResult& r) {
    const FieldElement head = table.basis()[0];
    switch (from) {
        case BasisKind::LCH: return;
        case BasisKind::Newton: r.core += newton_to_lch(table, lambda, a); return;
        case BasisKind::Lagrange: a = lagrange_to_lch(table, lambda, a.size(), a.size(), 0, a, r.core); return;
        case BasisKind::TwistedLCH:
            r.core += twisted_lch_to_monomial(table, a);
            [[fallthrough]];
        case BasisKind::Monomial:
            scale_by_powers(table.field(), StridedView(std::span(a)), head, r.twist);
            r.core += monomial_to_twisted_lch(table, a);
            return;
    }
}

void from_lch(const PrecompTable& table, BasisKind to, FieldElement lambda, std::vector<FieldElement>& a, ConversionResult& r) {
    const FieldElement head_inv = table.head_inv(table.tree().root());
    switch (to) {
        case BasisKind::LCH: return;
        case BasisKind::Newton: r.core += lch_to_newton(table, lambda, a); return;
        case BasisKind::Lagrange: a = lch_to_lagrange(table, lambda, a.size(), a, r.core); return;
        case BasisKind::Monomial:
        case BasisKind::TwistedLCH:
            r.core += twisted_lch_to_monomial(table, a);
            scale_by_powers(table.field(), StridedView(std::span(a)), head_inv, r.twist);
            if (to == BasisKind::TwistedLCH) r.core += monomial_to_twisted_lch(table, a);
            return;
    }
}

}  // namespace

ConversionResult convert(const PrecompTable& table, BasisKind from, BasisKind to, FieldElement lambda, std::size_t ell,
                         std::span<const FieldElement> coeffs) {
    check_ell(ell, full_length(table));
    if (coeffs.size() != ell) throw std::invalid_argument("expected exactly ell coefficients");
    ConversionResult r{std::vector<FieldElement>(coeffs.begin(), coeffs.end()), {}, {}};
    if (from == to) return r;
    if (from == BasisKind::Monomial && to == BasisKind::TwistedLCH) {
        r.core = monomial_to_twisted_lch(table, r.coeffs);
    } else if (from == BasisKind::TwistedLCH && to == BasisKind::Monomial) {
        r.core = twisted_lch_to_monomial(table, r.coeffs);
    } else {
        to_lch(table, from, lambda, r.coeffs, r);
        from_lch(table, to, lambda, r.coeffs, r);
    }
    return r;
}

}  // namespace lch

/**************************************************************************
 * basisgen.cpp
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

#include "lch/basisgen.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <random>
#include <stdexcept>

namespace lch {

namespace {

unsigned ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

void require_divides(const Field& field, unsigned d, std::string_view what) {
    if (!field.divides_degree(d))
        throw std::domain_error(std::string(what) + " requires " + std::to_string(d) + " | " + std::to_string(field.degree()));
}

// First power g^k (k >= 1) of the generator of GF(2^e) whose trace down to GF(2^s) is nonzero.
FieldElement first_nonzero_trace(const Field& field, unsigned s, unsigned e) {
    const FieldElement g = field.subfield_generator(e);
    FieldElement z = g;
    const std::uint64_t count = (std::uint64_t{1} << e) - 1;
    for (std::uint64_t k = 0; k < count; ++k, z = field.mul(z, g))
        if (!field.trace_rel(z, s, e).is_zero()) return z;
    throw std::logic_error("trace map is identically zero");
}

}  // namespace

std::string_view basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::Monomial: return "monomial";
        case BasisKind::Newton: return "newton";
        case BasisKind::Lagrange: return "lagrange";
        case BasisKind::LCH: return "lch";
        case BasisKind::TwistedLCH: return "twisted-lch";
    }
    return "?";
}

BasisKind parse_basis_kind(std::string_view name) {
    for (BasisKind k : {BasisKind::Monomial, BasisKind::Newton, BasisKind::Lagrange, BasisKind::LCH, BasisKind::TwistedLCH})
        if (basis_kind_name(k) == name) return k;
    throw std::invalid_argument("unknown basis kind '" + std::string(name) + "'");
}

FieldElement enumerate_point(const BasisVector& beta, std::uint64_t i) {
    if (beta.size() < 64 && (i >> beta.size()) != 0) throw std::out_of_range("enumeration index out of range");
    FieldElement acc = kZero;
    for (std::size_t k = 0; i != 0; ++k, i >>= 1)
        if (i & 1) acc += beta[k];
    return acc;
}

BasisVector alpha_of(const BasisVector& beta, unsigned d) {
    if (d < 1 || d >= beta.size()) throw std::out_of_range("split point out of range");
    return BasisVector(beta.begin(), beta.begin() + d);
}

BasisVector delta_of(const Field& field, const BasisVector& beta, unsigned d) {
    if (d < 1 || d >= beta.size()) throw std::out_of_range("split point out of range");
    const FieldElement inv0 = field.inv(beta[0]);
    BasisVector out;
    out.reserve(beta.size() - d);
    for (std::size_t i = d; i < beta.size(); ++i) {
        const FieldElement q = field.mul(beta[i], inv0);
        out.push_back(field.pow2k(q, d) + q);
    }
    return out;
}

bool is_independent(const BasisVector& beta) {
    std::array<std::uint32_t, 32> pivots{};
    for (FieldElement b : beta) {
        std::uint32_t v = b.bits;
        while (v != 0) {
            const int top = std::bit_width(v) - 1;
            if (pivots[top] == 0) {
                pivots[top] = v;
                break;
            }
            v ^= pivots[top];
        }
        if (v == 0) return false;
    }
    return true;
}

std::string TowerSpec::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        if (k > 0) out += '-';
        out += std::to_string(degrees[k]);
        if (k > 0 && trace_one[k - 1]) out += '!';
    }
    return out;
}

TowerSpec make_tower(const Field& field, std::vector<unsigned> degrees, std::vector<bool> trace_one) {
    if (degrees.size() < 2 || degrees[0] != 1) throw std::invalid_argument("tower must start at 1 and have at least two degrees");
    const std::size_t levels = degrees.size() - 1;
    if (trace_one.empty()) trace_one.assign(levels, false);
    if (trace_one.size() != levels) throw std::invalid_argument("trace-one flags do not match tower levels");
    for (std::size_t k = 0; k < levels; ++k)
        if (degrees[k + 1] <= degrees[k] || degrees[k + 1] % degrees[k] != 0)
            throw std::invalid_argument("tower degrees must strictly increase by divisibility");
    require_divides(field, degrees.back(), "tower");

    TowerSpec tower{std::move(degrees), {}, std::move(trace_one)};
    for (std::size_t k = 0; k < levels; ++k) {
        const unsigned s = tower.degrees[k];
        const unsigned e = tower.degrees[k + 1];
        if (tower.trace_one[k]) {
            if (e != 2 * s) throw std::invalid_argument("trace-one basis requested on a non-quadratic level");
            auto [one, t] = make_quadratic_trace_basis(field, s);
            tower.level_bases.push_back({one, t});
        } else {
            tower.level_bases.push_back(subfield_basis_powers(field, s, e));
        }
    }
    return tower;
}

TowerSpec parse_tower(const Field& field, std::string_view text) {
    std::vector<unsigned> degrees;
    std::vector<bool> flags;
    while (true) {
        const auto dash = text.find('-');
        std::string_view tok = text.substr(0, dash);
        bool flag = false;
        if (tok.ends_with('!')) {
            flag = true;
            tok.remove_suffix(1);
        }
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed tower spec '" + std::string(text) + "'");
        if (!degrees.empty()) flags.push_back(flag);
        else if (flag) throw std::invalid_argument("trace-one marker on the base degree");
        degrees.push_back(v);
        if (dash == std::string_view::npos) break;
        text.remove_prefix(dash + 1);
    }
    return make_tower(field, std::move(degrees), std::move(flags));
}

BasisVector construct_tower_basis(const Field& field, const TowerSpec& tower, unsigned n) {
    if (tower.degrees.size() < 2 || tower.level_bases.size() + 1 != tower.degrees.size())
        throw std::invalid_argument("invalid tower");
    if (n < 1 || n > tower.degrees.back()) throw std::invalid_argument("dimension exceeds the top tower degree");
    BasisVector out;
    for (unsigned i = 0; i < n; ++i) {
        FieldElement prod = kOne;
        unsigned rest = i;
        for (std::size_t k = 0; k < tower.level_bases.size(); ++k) {
            const unsigned radix = tower.degrees[k + 1] / tower.degrees[k];
            prod = field.mul(prod, tower.level_bases[k].at(rest % radix));
            rest /= radix;
        }
        out.push_back(prod);
    }
    return out;
}

BasisVector construct_gen_cantor(const Field& field, unsigned m_levels, unsigned t, const BasisVector& theta) {
    if (t < 1 || theta.size() != t) throw std::invalid_argument("theta must have exactly t entries");
    if (m_levels >= 32) throw std::invalid_argument("too many levels");
    const unsigned top = (1u << m_levels) * t;
    require_divides(field, top, "generalized Cantor construction");
    for (FieldElement th : theta)
        if (!field.in_subfield(th, t)) throw std::invalid_argument("theta entry outside GF(2^t)");
    if (!is_independent(theta)) throw std::invalid_argument("theta is linearly dependent");

    BasisVector beta(top);
    const FieldElement z0 = first_nonzero_trace(field, t, top);
    const FieldElement scale = field.mul(field.inv(field.trace_rel(z0, t, top)), z0);
    for (unsigned i = 0; i < t; ++i) beta[top - t + i] = field.mul(theta[i], scale);
    for (unsigned i = top - t; i-- > 0;) beta[i] = field.pow2k(beta[i + t], t) + beta[i + t];
    return beta;
}

BasisVector construct_cantor(const Field& field, unsigned n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    const unsigned levels = ceil_log2(n);
    require_divides(field, 1u << levels, "Cantor basis of dimension " + std::to_string(n));
    BasisVector beta = construct_gen_cantor(field, levels, 1, {kOne});
    beta.resize(n);
    return beta;
}

std::pair<FieldElement, FieldElement> make_quadratic_trace_basis(const Field& field, unsigned s) {
    require_divides(field, 2 * s, "quadratic trace basis");
    const FieldElement z = first_nonzero_trace(field, s, 2 * s);
    return {kOne, field.mul(z, field.inv(field.trace_rel(z, s, 2 * s)))};
}

BasisVector subfield_basis_powers(const Field& field, unsigned s, unsigned e) {
    if (s < 1 || e % s != 0) throw std::domain_error("subfield basis requires " + std::to_string(s) + " | " + std::to_string(e));
    require_divides(field, e, "subfield basis");
    const FieldElement xi = field.subfield_generator(e);
    BasisVector out{kOne};
    for (unsigned k = 1; k < e / s; ++k) out.push_back(field.mul(out.back(), xi));
    return out;
}

BasisVector random_basis(const Field& field, unsigned n, std::uint64_t seed) {
    if (n < 1 || n > field.degree()) throw std::invalid_argument("random basis dimension must be in 1..m");
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = field.order() - 1;
    BasisVector out;
    while (out.size() < n) {
        out.push_back(field.element(rng() & mask));
        if (!is_independent(out)) out.pop_back();
    }
    return out;
}

std::string format_basis(const BasisVector& beta) {
    std::string out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i > 0) out += ',';
        out += to_hex(beta[i]);
    }
    return out;
}

BasisVector parse_basis(const Field& field, std::string_view text) {
    BasisVector out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_element(field, text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace lch

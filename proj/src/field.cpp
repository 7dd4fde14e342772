/**************************************************************************
 * field.cpp
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

#include "lch/field.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace lch {

namespace {

constexpr unsigned kMaxDegree = 32;
constexpr unsigned kTableDegree = 16;

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
    const int df = poly_degree(f);
    for (int da = poly_degree(a); da >= df; da = poly_degree(a)) a ^= f << (da - df);
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed hex value '" + std::string(text) + "'");
    return v;
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
    const int m = poly_degree(poly);
    if (m < 1 || m > static_cast<int>(kMaxDegree)) return false;
    const std::uint64_t x = poly_mod(2, poly);
    std::uint64_t r = x;
    for (int k = 1; k <= m; ++k) {
        r = poly_mod(clmul(r, r), poly);
        if (2 * k <= m && poly_gcd(poly, r ^ x) != 1) return false;
    }
    return r == x;
}

std::uint64_t smallest_irreducible(unsigned degree) {
    if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("field degree must be in 1..32");
    const std::uint64_t top = std::uint64_t{1} << degree;
    for (std::uint64_t p = top; p < 2 * top; ++p)
        if (is_irreducible(p)) return p;
    throw std::logic_error("no irreducible polynomial found");
}

Field::Field(unsigned degree) : degree_(degree), modulus_(smallest_irreducible(degree)) { init(); }

Field::Field(unsigned degree, std::uint64_t modulus) : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("field degree must be in 1..32");
    if (poly_degree(modulus) != static_cast<int>(degree))
        throw std::invalid_argument("modulus degree does not match field degree");
    if (!is_irreducible(modulus)) throw std::invalid_argument("modulus is not irreducible");
    init();
}

Field Field::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view deg_text = spec.substr(0, colon);
    unsigned degree = 0;
    auto [ptr, ec] = std::from_chars(deg_text.data(), deg_text.data() + deg_text.size(), degree);
    if (deg_text.empty() || ec != std::errc{} || ptr != deg_text.data() + deg_text.size())
        throw std::invalid_argument("malformed field spec '" + std::string(spec) + "'");
    if (colon == std::string_view::npos) return Field(degree);
    return Field(degree, parse_hex(spec.substr(colon + 1)));
}

std::string Field::spec_string() const {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, modulus_, 16);
    std::string hex(buf, ptr);
    for (char& ch : hex) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return std::to_string(degree_) + ":0x" + hex;
}

void Field::init() {
    const std::uint64_t n = order() - 1;
    const auto primes = prime_factors(n);
    for (std::uint64_t g = 1; g <= n; ++g) {
        const FieldElement cand{static_cast<std::uint32_t>(g)};
        bool generates = true;
        for (std::uint64_t p : primes) {
            if (pow(cand, n / p) == kOne) {
                generates = false;
                break;
            }
        }
        if (generates) {
            primitive_ = cand;
            break;
        }
    }
    if (degree_ > kTableDegree) return;
    log_.assign(order(), 0);
    exp_.assign(2 * n, 0);
    FieldElement x = kOne;
    for (std::uint64_t i = 0; i < 2 * n; ++i) {
        exp_[i] = x.bits;
        if (i < n) log_[x.bits] = static_cast<std::uint32_t>(i);
        x = mul_bitwise(x, primitive_);
    }
}

FieldElement Field::element(std::uint64_t bits) const {
    if ((bits >> degree_) != 0) throw std::invalid_argument("element does not fit the field degree");
    return {static_cast<std::uint32_t>(bits)};
}

FieldElement Field::mul_bitwise(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(poly_mod(clmul(a.bits, b.bits), modulus_))};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = kOne;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("zero has no inverse");
    return pow(a, order() - 2);
}

FieldElement Field::pow2k(FieldElement a, unsigned d) const {
    for (unsigned k = d % degree_; k > 0; --k) a = mul(a, a);
    return a;
}

FieldElement Field::trace_rel(FieldElement a, unsigned s, unsigned e) const {
    if (s == 0 || e % s != 0) throw std::domain_error("trace requires the subfield degree to divide the extension degree");
    if (!in_subfield(a, e)) throw std::domain_error("trace argument lies outside GF(2^" + std::to_string(e) + ")");
    FieldElement acc = kZero;
    FieldElement term = a;
    for (unsigned j = 0; j < e / s; ++j) {
        acc += term;
        term = pow2k(term, s);
    }
    return acc;
}

bool Field::in_subfield(FieldElement a, unsigned d) const {
    if (!divides_degree(d)) throw std::domain_error("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(degree_));
    return pow2k(a, d) == a;
}

FieldElement Field::subfield_generator(unsigned d) const {
    if (!divides_degree(d)) throw std::domain_error("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(degree_));
    const std::uint64_t n = order() - 1;
    const std::uint64_t k = (std::uint64_t{1} << d) - 1;
    return pow(primitive_, n / k);
}

std::string to_hex(FieldElement a) {
    char buf[16];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, a.bits, 16);
    return std::string(buf, ptr);
}

FieldElement parse_element(const Field& field, std::string_view text) { return field.element(parse_hex(text)); }

}  // namespace lch

/**************************************************************************
 * redtree.cpp
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

#include "lch/redtree.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace lch {

namespace {

constexpr unsigned kMaxEnumeration = 10;

unsigned ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

unsigned cantor_split(unsigned n) { return 1u << (ceil_log2(n) - 1); }

template <typename Split>
ReductionTree build_by_split(unsigned n, const Split& split) {
    if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
    if (n == 1) return ReductionTree::leaf();
    const unsigned d = split(n);
    return ReductionTree::join(build_by_split(d, split), build_by_split(n - d, split));
}

void require_one(const std::set<unsigned>& degrees) {
    if (!degrees.contains(1)) throw std::invalid_argument("degree set must contain 1");
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    void expect(char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("malformed tree '" + std::string(text) + "': expected '" + c + "'");
        ++pos;
    }
    ReductionTree tree() {
        skip();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            return ReductionTree::leaf();
        }
        expect('(');
        ReductionTree a = tree();
        expect(',');
        ReductionTree d = tree();
        expect(')');
        return ReductionTree::join(a, d);
    }
};

void serialize(const ReductionTree& t, VertexId v, std::string& out) {
    if (t.is_leaf(v)) {
        out += '*';
        return;
    }
    out += '(';
    serialize(t, t[v].alpha, out);
    out += ',';
    serialize(t, t[v].delta, out);
    out += ')';
}

bool validate_at(const Field& field, const ReductionTree& tree, VertexId v, const BasisVector& beta) {
    const auto& node = tree[v];
    if (node.leaves != beta.size()) return false;
    if (tree.is_leaf(v)) return true;
    const unsigned d = node.split;
    if (beta[0].is_zero() || !field.divides_degree(d)) return false;
    const FieldElement inv0 = field.inv(beta[0]);
    for (unsigned i = 1; i < d; ++i)
        if (!field.in_subfield(field.mul(beta[i], inv0), d)) return false;
    return validate_at(field, tree, node.alpha, alpha_of(beta, d)) &&
           validate_at(field, tree, node.delta, delta_of(field, beta, d));
}

std::set<unsigned> parse_degree_set(std::string_view text) {
    std::set<unsigned> out;
    while (true) {
        const auto dash = text.find('-');
        std::string_view tok = text.substr(0, dash);
        if (tok.ends_with('!')) tok.remove_suffix(1);
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed degree list '" + std::string(text) + "'");
        out.insert(v);
        if (dash == std::string_view::npos) break;
        text.remove_prefix(dash + 1);
    }
    return out;
}

unsigned parse_unsigned(std::string_view text) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    return v;
}

}  // namespace

ReductionTree ReductionTree::join(const ReductionTree& alpha, const ReductionTree& delta) {
    ReductionTree out;
    const auto na = static_cast<VertexId>(alpha.size());
    out.vertices_.reserve(1 + alpha.size() + delta.size());
    Vertex& root = out.vertices_[0];
    root.alpha = 1;
    root.delta = 1 + na;
    root.leaves = alpha.leaf_count() + delta.leaf_count();
    root.split = alpha.leaf_count();
    auto shifted = [](Vertex v, VertexId by, unsigned leaf_by) {
        if (v.alpha != kNoVertex) {
            v.alpha += by;
            v.delta += by;
        }
        v.first_leaf += leaf_by;
        return v;
    };
    for (const Vertex& v : alpha.vertices_) out.vertices_.push_back(shifted(v, 1, 0));
    for (const Vertex& v : delta.vertices_) out.vertices_.push_back(shifted(v, 1 + na, alpha.leaf_count()));
    return out;
}

ReductionTree ReductionTree::parse(std::string_view text) {
    Parser p{text};
    ReductionTree t = p.tree();
    p.skip();
    if (p.pos != text.size()) throw std::invalid_argument("trailing characters in tree '" + std::string(text) + "'");
    return t;
}

std::string ReductionTree::to_string() const {
    std::string out;
    serialize(*this, root(), out);
    return out;
}

std::set<unsigned> ReductionTree::split_image() const {
    std::set<unsigned> out;
    for (const Vertex& v : vertices_)
        if (v.alpha != kNoVertex) out.insert(v.split);
    return out;
}

bool validate(const Field& field, const ReductionTree& tree, const BasisVector& beta) {
    return validate_at(field, tree, tree.root(), beta);
}

ReductionTree build_trivial(unsigned n) {
    return build_by_split(n, [](unsigned) { return 1u; });
}

ReductionTree build_cantor_tree(unsigned n) { return build_by_split(n, cantor_split); }

ReductionTree build_max_tree(unsigned n, const std::set<unsigned>& degrees) {
    require_one(degrees);
    return build_by_split(n, [&](unsigned nv) { return *std::prev(degrees.lower_bound(nv)); });
}

ReductionTree build_balanced_tree(unsigned n, const std::set<unsigned>& degrees) {
    require_one(degrees);
    return build_by_split(n, [&](unsigned nv) {
        unsigned best = 1;
        for (unsigned i : degrees) {
            if (i < 1 || i >= nv) continue;
            if (std::max(i, nv - i) <= std::max(best, nv - best)) best = i;
        }
        return best;
    });
}

ReductionTree graft_cantor_tree(unsigned t, unsigned n, const std::vector<ReductionTree>& base_trees) {
    if (t < 1 || n < 1) throw std::invalid_argument("graft needs positive block size and dimension");
    const unsigned blocks = (n + t - 1) / t;
    if (base_trees.size() != blocks) throw std::invalid_argument("graft needs one base tree per block");
    for (unsigned i = 0; i < blocks; ++i)
        if (base_trees[i].leaf_count() != std::min(n - i * t, t))
            throw std::invalid_argument("base tree " + std::to_string(i) + " has the wrong number of leaves");
    std::function<ReductionTree(unsigned, unsigned)> build = [&](unsigned lo, unsigned hi) {
        if (hi - lo == 1) return base_trees[lo];
        const unsigned d = cantor_split(hi - lo);
        return ReductionTree::join(build(lo, lo + d), build(lo + d, hi));
    };
    return build(0, blocks);
}

ReductionTree graft_cantor_tree(unsigned t, unsigned n) {
    if (t < 1 || n < 1) throw std::invalid_argument("graft needs positive block size and dimension");
    std::vector<ReductionTree> bases;
    for (unsigned i = 0; i * t < n; ++i) bases.push_back(build_trivial(std::min(n - i * t, t)));
    return graft_cantor_tree(t, n, bases);
}

std::vector<ReductionTree> enumerate_trees(unsigned n) {
    if (n < 1 || n > kMaxEnumeration) throw std::invalid_argument("tree enumeration supports 1..10 leaves");
    std::vector<std::vector<ReductionTree>> by_size(n + 1);
    by_size[1].push_back(ReductionTree::leaf());
    for (unsigned k = 2; k <= n; ++k)
        for (unsigned a = 1; a < k; ++a)
            for (const auto& ta : by_size[a])
                for (const auto& td : by_size[k - a]) by_size[k].push_back(ReductionTree::join(ta, td));
    return std::move(by_size[n]);
}

void for_each_tree(unsigned n, const std::function<void(const ReductionTree&)>& visit) {
    for (const auto& t : enumerate_trees(n)) visit(t);
}

bool is_cantor_shaped(const ReductionTree& tree) {
    for (VertexId v = 0; v < tree.size(); ++v)
        if (!tree.is_leaf(v) && tree[v].split != cantor_split(tree[v].leaves)) return false;
    return true;
}

ReductionTree build_tree_strategy(std::string_view strategy, unsigned n) {
    if (strategy == "trivial") return build_trivial(n);
    if (strategy == "cantor") return build_cantor_tree(n);
    if (strategy.starts_with("max:")) return build_max_tree(n, parse_degree_set(strategy.substr(4)));
    if (strategy.starts_with("balanced:")) return build_balanced_tree(n, parse_degree_set(strategy.substr(9)));
    if (strategy.starts_with("graft:")) return graft_cantor_tree(parse_unsigned(strategy.substr(6)), n);
    if (strategy.starts_with("(") || strategy == "*") {
        ReductionTree t = ReductionTree::parse(strategy);
        if (t.leaf_count() != n)
            throw std::invalid_argument("tree has " + std::to_string(t.leaf_count()) + " leaves, expected " + std::to_string(n));
        return t;
    }
    throw std::invalid_argument("unknown tree strategy '" + std::string(strategy) + "'");
}

}  // namespace lch

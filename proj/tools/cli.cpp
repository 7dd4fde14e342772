/**************************************************************************
 * cli.cpp
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "lch/basisgen.hpp"
#include "lch/count_model.hpp"
#include "lch/field.hpp"
#include "lch/oracle.hpp"
#include "lch/precomp.hpp"
#include "lch/redtree.hpp"
#include "lch/transforms.hpp"

namespace lch::cli {

namespace {

constexpr unsigned kMaxCountDimension = 24;
constexpr unsigned kMaxVerifyDimension = 6;

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw CliError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

unsigned ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1)); }

// -- transforms ------------------------------------------------------------

enum class Op { N2X, X2N, L2X, X2L, X2M, M2X, Taylor, Convert };

struct TransformSpec {
    Op op = Op::N2X;
    BasisKind from = BasisKind::Monomial;
    BasisKind to = BasisKind::Monomial;
};

TransformSpec parse_transform(std::string_view text) {
    static const std::pair<std::string_view, Op> simple[] = {{"n2x", Op::N2X}, {"x2n", Op::X2N}, {"l2x", Op::L2X}, {"x2l", Op::X2L},
                                                             {"x2m", Op::X2M}, {"m2x", Op::M2X}, {"taylor", Op::Taylor}};
    for (auto [name, op] : simple)
        if (text == name) return {op};
    if (text.starts_with("conv:")) {
        const std::string_view rest = text.substr(5);
        for (std::size_t pos = rest.find('-'); pos != std::string_view::npos; pos = rest.find('-', pos + 1)) {
            try {
                TransformSpec spec{Op::Convert, parse_basis_kind(rest.substr(0, pos)), parse_basis_kind(rest.substr(pos + 1))};
                if (spec.from == spec.to) throw CliError("conversion needs two different bases");
                return spec;
            } catch (const std::invalid_argument&) {
            }
        }
    }
    throw CliError("unknown transform '" + std::string(text) + "'");
}

// -- config ----------------------------------------------------------------

std::string ell_string(const RunConfig& c) {
    std::string s = std::to_string(c.ell_min) + ":" + (c.ell_max == 0 ? std::string("max") : std::to_string(c.ell_max));
    if (c.ell_step != 1) s += ":" + std::to_string(c.ell_step);
    return s;
}

void parse_ell(std::string_view text, RunConfig& c) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos; start = pos + 1) parts.push_back(text.substr(start, pos - start));
    parts.push_back(text.substr(start));
    if (parts.size() > 3) throw CliError("invalid ell range '" + std::string(text) + "'");
    c.ell_min = parse_uint(parts[0], "ell");
    c.ell_max = c.ell_min;
    c.ell_step = 1;
    if (parts.size() >= 2) c.ell_max = parts[1] == "max" ? 0 : parse_uint(parts[1], "ell");
    if (parts.size() == 3) c.ell_step = parse_uint(parts[2], "ell step");
}

std::unique_ptr<CLI::App> make_app(RunConfig& c, std::string& ell) {
    auto app = std::make_unique<CLI::App>("Conversions between monomial, Newton, Lagrange and LCH bases over GF(2^m)", "lchconv");
    app->add_option("--field", c.field, "field as <m>:0x<modulus> or <m>");
    app->add_option("--basis", c.basis, "cantor | gencantor:<t> | tower:<spec> | random:<seed> | hex list");
    app->add_option("--tree", c.tree, "trivial | cantor | max:<tower> | balanced:<tower> | graft:<t> | serialization | all");
    app->add_option("--n", c.n, "subspace dimension");
    app->add_option("--transform", c.transform, "n2x x2n l2x x2l x2m m2x taylor conv:<from>-<to>");
    app->add_option("--ell", ell, "range <min>[:<max>|max[:<step>]]");
    app->add_option("--lambda", c.lambda, "shift as hex");
    app->add_option("--c", c.c, "evaluation count for l2x/x2l: ell or an integer");
    app->add_option("--b", c.b, "extra output flag for l2x (0 or 1)");
    app->add_option("--taylor-t", c.taylor_t, "block length of the Taylor expansion");
    app->add_option("--engine", c.engine, "measured | model");
    app->add_flag("--ignore-unit-head-guard", c.ignore_unit_head_guard, "count block scalings by one in x2m/m2x");
    app->add_option("--bound", c.bounds, "bound id[:adds|:muls], repeatable");
    app->add_option("--out", c.out, "output path or -");
    return app;
}

RunConfig parse_flags(std::string command, const std::function<void(CLI::App&)>& parse) {
    if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
        throw CliError("unknown command '" + command + "'");
    RunConfig c;
    c.command = std::move(command);
    std::string ell = ell_string(c);
    auto app = make_app(c, ell);
    try {
        parse(*app);
    } catch (const CLI::ParseError& e) {
        throw CliError(e.what());
    }
    parse_ell(ell, c);
    return normalize(c);
}

std::string quote(const std::string& s) {
    if (!s.empty() && s.find_first_of(" \t\"'") == std::string::npos) return s;
    return "\"" + s + "\"";
}

// -- shared setup ----------------------------------------------------------

struct Setup {
    Field field;
    BasisVector beta;
    unsigned n = 0;
    FieldElement lambda;
};

BasisVector make_basis(const Field& field, const std::string& source, unsigned n) {
    if (source == "cantor") return construct_cantor(field, n);
    if (source.starts_with("gencantor:")) {
        const auto t = static_cast<unsigned>(parse_uint(std::string_view(source).substr(10), "gencantor block"));
        if (t == 0) throw CliError("gencantor block length must be positive");
        const unsigned levels = std::max(1u, ceil_log2((n + t - 1) / t));
        BasisVector beta = construct_gen_cantor(field, levels, t, subfield_basis_powers(field, 1, t));
        if (beta.size() < n) throw CliError("gencantor basis has only " + std::to_string(beta.size()) + " entries");
        beta.resize(n);
        return beta;
    }
    if (source.starts_with("tower:")) return construct_tower_basis(field, parse_tower(field, std::string_view(source).substr(6)), n);
    if (source.starts_with("random:")) return random_basis(field, n, parse_uint(std::string_view(source).substr(7), "seed"));
    throw CliError("unknown basis source '" + source + "'");
}

bool is_explicit_basis(const std::string& source) {
    return !(source == "cantor" || source.starts_with("gencantor:") || source.starts_with("tower:") || source.starts_with("random:"));
}

Setup make_setup(const RunConfig& c) {
    try {
        Setup s{Field::parse(c.field), {}, c.n, kZero};
        if (is_explicit_basis(c.basis)) {
            s.beta = parse_basis(s.field, c.basis);
            if (c.n != 0 && c.n != s.beta.size()) throw CliError("--n does not match the length of the explicit basis");
            s.n = static_cast<unsigned>(s.beta.size());
            if (!is_independent(s.beta)) throw CliError("explicit basis entries are not linearly independent");
        } else {
            if (c.n == 0) throw CliError("--n is required");
            if (c.n > s.field.degree()) throw CliError("--n exceeds the field degree");
            s.beta = make_basis(s.field, c.basis, c.n);
        }
        s.lambda = parse_element(s.field, c.lambda);
        return s;
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError(e.what());
    }
}

ReductionTree make_tree(const RunConfig& c, const Setup& s) {
    try {
        return build_tree_strategy(c.tree, s.n);
    } catch (const std::exception& e) {
        throw CliError(e.what());
    }
}

PrecompTable make_table(const RunConfig& c, const Setup& s) {
    ReductionTree tree = make_tree(c, s);
    if (!validate(s.field, tree, s.beta))
        throw CliError("validation failure: tree " + tree.to_string() + " is not a reduction tree for the basis", 1);
    return PrecompTable(s.field, std::move(tree), s.beta);
}

template <class Fn>
int with_output(const RunConfig& c, std::ostream& out, Fn&& fn) {
    if (c.out == "-") return fn(out);
    std::ofstream file(c.out);
    if (!file) throw CliError("cannot open output file '" + c.out + "'");
    const int rc = fn(file);
    if (!file.flush()) throw CliError("failed writing '" + c.out + "'");
    return rc;
}

void write_header(std::ostream& os, const RunConfig& c, const Setup& s, const ReductionTree* tree) {
    os << "# lchconv " << to_string(c) << "\n";
    os << "# field " << s.field.spec_string() << "\n";
    os << "# basis " << format_basis(s.beta) << "\n";
    if (tree != nullptr) os << "# tree " << tree->to_string() << "\n";
}

// -- counting --------------------------------------------------------------

struct Row {
    std::uint64_t ell = 0;
    OpCounter core;
    OpCounter twist;
};

struct Counter {
    const RunConfig& cfg;
    const Setup& setup;
    const PrecompTable& table;
    TransformSpec spec;
    TransformOptions opts;
    std::optional<CountModel> model;
    std::vector<FieldElement> buffer;
    std::vector<FieldElement> phi;

    Counter(const RunConfig& c, const Setup& s, const PrecompTable& t)
        : cfg(c), setup(s), table(t), spec(parse_transform(c.transform)), opts{c.ignore_unit_head_guard} {
        if (cfg.engine == "model") {
            if (spec.op == Op::Convert) throw CliError("the model engine does not cover composed conversions");
            model.emplace(table, opts);
        }
        buffer.resize(std::size_t{1} << setup.n);
        std::mt19937_64 rng(0);
        const std::uint64_t mask = setup.field.order() - 1;
        for (auto& x : buffer) x = FieldElement{static_cast<std::uint32_t>(rng() & mask)};
        phi = table.initial_phi_vector(setup.lambda);
    }

    std::size_t c_for(std::uint64_t ell) const {
        if (cfg.c == "ell") return ell;
        return std::min<std::uint64_t>(std::stoull(cfg.c), ell);
    }

    Row row(std::uint64_t ell) {
        Row r{ell, {}, {}};
        if (model) {
            switch (spec.op) {
                case Op::N2X: r.core = model->n2x(ell); break;
                case Op::X2N: r.core = model->x2n(ell); break;
                case Op::L2X:
                    check_l2x(ell);
                    r.core = model->l2x(c_for(ell), ell, cfg.b);
                    break;
                case Op::X2L:
                    check_x2l(ell);
                    r.core = model->x2l(c_for(ell), ell);
                    break;
                case Op::X2M: r.core = model->x2m(ell); break;
                case Op::M2X: r.core = model->m2x(ell); break;
                case Op::Taylor: r.core = CountModel::taylor(cfg.taylor_t, ell); break;
                case Op::Convert: break;
            }
            return r;
        }
        std::vector<FieldElement> work = buffer;
        const StridedView view{std::span<FieldElement>(work)};
        std::span<const FieldElement> head(buffer.data(), ell);
        switch (spec.op) {
            case Op::N2X: n2x(table, table.tree().root(), phi, ell, view, r.core); break;
            case Op::X2N: x2n(table, table.tree().root(), phi, ell, view, r.core); break;
            case Op::L2X:
                check_l2x(ell);
                lagrange_to_lch(table, setup.lambda, c_for(ell), ell, cfg.b, head, r.core);
                break;
            case Op::X2L:
                check_x2l(ell);
                lch_to_lagrange(table, setup.lambda, c_for(ell), head, r.core);
                break;
            case Op::X2M: x2m(table, table.tree().root(), ell, view, r.core, opts); break;
            case Op::M2X: m2x(table, table.tree().root(), ell, view, r.core, opts); break;
            case Op::Taylor: taylor_expand(cfg.taylor_t, ell, view, r.core); break;
            case Op::Convert: {
                ConversionResult res = convert(table, spec.from, spec.to, setup.lambda, ell, head);
                r.core = res.core;
                r.twist = res.twist;
                break;
            }
        }
        return r;
    }

    void check_l2x(std::uint64_t ell) const {
        if (c_for(ell) + cfg.b < 1 || c_for(ell) + cfg.b > (std::uint64_t{1} << setup.n))
            throw CliError("l2x needs 1 <= c + b <= 2^n (ell=" + std::to_string(ell) + ")");
    }
    void check_x2l(std::uint64_t ell) const {
        if (c_for(ell) < 1) throw CliError("x2l needs c >= 1 (ell=" + std::to_string(ell) + ")");
    }
};

template <class Fn>
void for_each_ell(const RunConfig& c, const Setup& s, Fn&& fn) {
    const std::uint64_t full = std::uint64_t{1} << s.n;
    const std::uint64_t hi = c.ell_max == 0 ? full : c.ell_max;
    if (c.ell_min < 1 || hi > full || c.ell_min > hi)
        throw CliError("ell range " + ell_string(c) + " must lie within 1.." + std::to_string(full));
    for (std::uint64_t ell = c.ell_min; ell <= hi; ell += c.ell_step) fn(ell);
}

struct BoundCheck {
    std::string id;
    bool multiplications = false;
};

BoundCheck parse_bound(const std::string& text) {
    BoundCheck b;
    std::string id = text;
    std::optional<bool> target;
    if (auto pos = text.rfind(':'); pos != std::string::npos) {
        const std::string suffix = text.substr(pos + 1);
        if (suffix == "adds") target = false;
        else if (suffix == "muls") target = true;
        else throw CliError("bound target must be adds or muls in '" + text + "'");
        id = text.substr(0, pos);
    }
    const auto& ids = bound_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw CliError("unknown bound id '" + id + "'");
    b.id = id;
    b.multiplications = target.value_or(id.ends_with("_mul") || id == "zero");
    return b;
}

std::vector<BoundCheck> default_bounds(const TransformSpec& spec, bool cantor, bool full_lagrange) {
    std::vector<BoundCheck> out;
    auto add = [&](const char* id, bool muls) { out.push_back({id, muls}); };
    switch (spec.op) {
        case Op::N2X:
        case Op::X2N:
            add("newton_add", false);
            add("newton_mul", true);
            if (cantor) add("cantor_newton_add", false);
            break;
        case Op::L2X:
        case Op::X2L:
            add(spec.op == Op::L2X ? "l2x_add" : "x2l_add", false);
            add(spec.op == Op::L2X ? "l2x_mul" : "x2l_mul", true);
            if (full_lagrange) {
                add("lagrange_add", false);
                add("lagrange_mul", true);
            }
            break;
        case Op::X2M:
        case Op::M2X:
            add("monomial_add", false);
            add("monomial_mul", true);
            if (cantor) {
                add("cantor_monomial_add", false);
                add("zero", true);
            }
            break;
        case Op::Taylor: add("taylor_add", false); break;
        case Op::Convert: throw CliError("composed conversions have no default bound; pass --bound");
    }
    return out;
}

}  // namespace

// -- config API ------------------------------------------------------------

RunConfig parse_run_config(const std::vector<std::string>& args) {
    if (args.empty()) throw CliError("missing command (one of construct, verify, counts, bounds, trees)");
    return parse_flags(args[0], [&](CLI::App& app) {
        std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
        app.parse(rest);
    });
}

RunConfig parse_run_config(std::string_view line) {
    const std::string s(line);
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) throw CliError("missing command (one of construct, verify, counts, bounds, trees)");
    const auto end = s.find_first_of(" \t", begin);
    const std::string command = s.substr(begin, end - begin);
    const std::string rest = end == std::string::npos ? std::string() : s.substr(end);
    return parse_flags(command, [&](CLI::App& app) { app.parse(rest, false); });
}

std::string to_string(const RunConfig& c) {
    std::ostringstream os;
    os << c.command << " --field " << c.field << " --basis " << quote(c.basis) << " --tree " << quote(c.tree) << " --n " << c.n
       << " --transform " << c.transform << " --ell " << ell_string(c) << " --lambda " << c.lambda << " --c " << c.c << " --b "
       << c.b << " --taylor-t " << c.taylor_t << " --engine " << c.engine;
    if (c.ignore_unit_head_guard) os << " --ignore-unit-head-guard";
    for (const auto& b : c.bounds) os << " --bound " << b;
    os << " --out " << quote(c.out);
    return os.str();
}

RunConfig normalize(const RunConfig& config) {
    RunConfig c = config;
    if (std::find(command_names().begin(), command_names().end(), c.command) == command_names().end())
        throw CliError("unknown command '" + c.command + "'");
    try {
        const Field field = Field::parse(c.field);
        c.field = field.spec_string();
        c.lambda = to_hex(parse_element(field, c.lambda));
        if (is_explicit_basis(c.basis)) c.basis = format_basis(parse_basis(field, c.basis));
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError(e.what());
    }
    parse_transform(c.transform);
    if (c.c != "ell") c.c = std::to_string(parse_uint(c.c, "c"));
    if (c.b > 1) throw CliError("--b must be 0 or 1");
    if (c.taylor_t < 2) throw CliError("--taylor-t must be at least 2");
    if (c.engine != "measured" && c.engine != "model") throw CliError("--engine must be measured or model");
    if (c.ell_min < 1 || c.ell_step < 1) throw CliError("ell range needs min >= 1 and step >= 1");
    if (c.ell_max != 0 && c.ell_max < c.ell_min) throw CliError("ell range is empty");
    for (const auto& b : c.bounds) parse_bound(b);
    if (c.out.empty()) throw CliError("--out must not be empty");
    return c;
}

// -- commands --------------------------------------------------------------

int cmd_construct(const RunConfig& c, std::ostream& out) {
    const Setup s = make_setup(c);
    return with_output(c, out, [&](std::ostream& os) {
        for (FieldElement x : s.beta) os << to_hex(x) << "\n";
        return 0;
    });
}

int cmd_trees(const RunConfig& c, std::ostream& out) {
    const Setup s = make_setup(c);
    auto describe = [&](std::ostream& os, const ReductionTree& tree) {
        const bool ok = validate(s.field, tree, s.beta);
        os << tree.to_string() << " splits=";
        const auto image = tree.split_image();
        bool first = true;
        for (unsigned d : image) {
            os << (first ? "" : ",") << d;
            first = false;
        }
        if (image.empty()) os << "-";
        os << " valid=" << (ok ? "yes" : "no") << "\n";
        return ok;
    };
    return with_output(c, out, [&](std::ostream& os) {
        write_header(os, c, s, nullptr);
        if (c.tree == "all") {
            if (s.n > 10) throw CliError("--tree all needs n <= 10");
            for_each_tree(s.n, [&](const ReductionTree& t) { describe(os, t); });
            return 0;
        }
        const ReductionTree tree = make_tree(c, s);
        if (!describe(os, tree)) throw CliError("validation failure: tree " + tree.to_string() + " is not a reduction tree for the basis", 1);
        return 0;
    });
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const Setup s = make_setup(c);
    if (s.n > kMaxVerifyDimension) throw CliError("verify needs n <= " + std::to_string(kMaxVerifyDimension));
    const PrecompTable table = make_table(c, s);
    const BasisKind kinds[] = {BasisKind::Monomial, BasisKind::Newton, BasisKind::Lagrange, BasisKind::LCH, BasisKind::TwistedLCH};
    std::vector<FieldElement> lambdas{kZero};
    if (s.lambda != kZero) lambdas.push_back(s.lambda);

    std::size_t checks = 0, failures = 0;
    with_output(c, out, [&](std::ostream& os) {
        write_header(os, c, s, &table.tree());
        std::mt19937_64 rng(1);
        const std::uint64_t mask = s.field.order() - 1;
        auto random_vector = [&](std::size_t len) {
            std::vector<FieldElement> v(len);
            for (auto& x : v) x = FieldElement{static_cast<std::uint32_t>(rng() & mask)};
            return v;
        };
        auto report = [&](bool ok, const std::string& what, std::uint64_t ell, FieldElement lambda) {
            ++checks;
            if (!ok) ++failures;
            os << (ok ? "PASS " : "FAIL ") << what << " ell=" << ell << " lambda=" << to_hex(lambda) << "\n";
        };
        const std::size_t full = std::size_t{1} << s.n;
        for (FieldElement lambda : lambdas) {
            Oracle oracle(s.field, s.beta, lambda);
            for (BasisKind from : kinds)
                for (BasisKind to : kinds) {
                    if (from == to) continue;
                    const std::string name = "conv:" + std::string(basis_kind_name(from)) + "-" + std::string(basis_kind_name(to));
                    for (std::size_t ell = 1; ell <= full; ++ell) {
                        const auto input = random_vector(ell);
                        const auto fast = convert(table, from, to, lambda, ell, input);
                        const bool matches = fast.coeffs == oracle.convert(from, to, ell, input);
                        const bool round_trip = convert(table, to, from, lambda, ell, fast.coeffs).coeffs == input;
                        report(matches && round_trip, name, ell, lambda);
                    }
                }
            for (std::size_t ell = 1; ell <= full; ++ell)
                for (std::size_t cc = 0; cc <= ell; ++cc)
                    for (unsigned b = 0; b <= 1; ++b) {
                        if (cc + b < 1 || cc + b > full) continue;
                        const auto input = random_vector(ell);
                        OpCounter ops;
                        const bool ok = lagrange_to_lch(table, lambda, cc, ell, b, input, ops) == oracle.l2x_mixed(cc, ell, b, input);
                        report(ok, "l2x c=" + std::to_string(cc) + " b=" + std::to_string(b), ell, lambda);
                    }
        }
        os << "# " << checks << " checks, " << failures << " failures\n";
        return 0;
    });
    if (failures != 0) throw CliError(std::to_string(failures) + " of " + std::to_string(checks) + " checks failed", 1);
    return 0;
}

int cmd_counts(const RunConfig& c, std::ostream& out) {
    const Setup s = make_setup(c);
    if (s.n > kMaxCountDimension) throw CliError("counts needs n <= " + std::to_string(kMaxCountDimension));
    const PrecompTable table = make_table(c, s);
    Counter counter(c, s, table);
    const bool twist = counter.spec.op == Op::Convert;
    return with_output(c, out, [&](std::ostream& os) {
        write_header(os, c, s, &table.tree());
        os << "ell,additions,multiplications" << (twist ? ",twist_multiplications" : "") << "\n";
        for_each_ell(c, s, [&](std::uint64_t ell) {
            const Row r = counter.row(ell);
            os << r.ell << "," << r.core.additions << "," << r.core.multiplications;
            if (twist) os << "," << r.twist.multiplications;
            os << "\n";
        });
        return 0;
    });
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
    const Setup s = make_setup(c);
    if (s.n > kMaxCountDimension) throw CliError("bounds needs n <= " + std::to_string(kMaxCountDimension));
    const PrecompTable table = make_table(c, s);
    Counter counter(c, s, table);

    const bool cantor = c.basis == "cantor" && is_cantor_shaped(table.tree());
    std::vector<BoundCheck> checks;
    if (!c.bounds.empty()) {
        for (const auto& b : c.bounds) checks.push_back(parse_bound(b));
    } else {
        const bool full_lagrange = c.c == "ell" && (counter.spec.op == Op::X2L || c.b == 0);
        checks = default_bounds(counter.spec, cantor, full_lagrange);
    }

    struct Slack {
        std::int64_t worst = std::numeric_limits<std::int64_t>::max();
        std::uint64_t at = 0;
    };
    std::vector<Slack> slack(checks.size());
    std::optional<std::string> violation;

    for_each_ell(c, s, [&](std::uint64_t ell) {
        const Row r = counter.row(ell);
        const BoundParams p{ell, counter.c_for(ell), c.b, s.n, c.taylor_t};
        for (std::size_t k = 0; k < checks.size(); ++k) {
            const std::uint64_t got = checks[k].multiplications ? r.core.multiplications : r.core.additions;
            const std::uint64_t limit = bound(checks[k].id, p);
            const std::int64_t diff = static_cast<std::int64_t>(limit) - static_cast<std::int64_t>(got);
            if (diff < slack[k].worst) slack[k] = {diff, ell};
            if (diff < 0 && !violation)
                violation = c.transform + " exceeds " + checks[k].id + (checks[k].multiplications ? " (multiplications)" : " (additions)") +
                            " at ell=" + std::to_string(ell) + ": " + std::to_string(got) + " > " + std::to_string(limit);
        }
    });

    with_output(c, out, [&](std::ostream& os) {
        write_header(os, c, s, &table.tree());
        os << "bound,target,worst_slack,at_ell\n";
        for (std::size_t k = 0; k < checks.size(); ++k)
            os << checks[k].id << "," << (checks[k].multiplications ? "muls" : "adds") << "," << slack[k].worst << "," << slack[k].at << "\n";
        return 0;
    });
    if (violation) throw CliError(*violation, 1);
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const bool help = std::any_of(args.begin(), args.end(), [](const std::string& a) { return a == "--help" || a == "-h"; });
    if (help || (!args.empty() && args[0] == "help")) {
        RunConfig c;
        std::string ell;
        out << "usage: lchconv <construct|verify|counts|bounds|trees> [flags]\n" << make_app(c, ell)->help();
        return 0;
    }
    try {
        const RunConfig c = parse_run_config(args);
        if (c.command == "construct") return cmd_construct(c, out);
        if (c.command == "verify") return cmd_verify(c, out);
        if (c.command == "counts") return cmd_counts(c, out);
        if (c.command == "bounds") return cmd_bounds(c, out);
        return cmd_trees(c, out);
    } catch (const CliError& e) {
        err << "ERROR: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "ERROR: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lch::cli

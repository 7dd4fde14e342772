/**************************************************************************
 * test_cli.cpp
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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace lch::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> r;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) r.push_back(line);
    return r;
}

std::vector<std::string> data_rows(const std::string& text) {
    std::vector<std::string> r;
    for (auto& l : lines(text))
        if (!l.empty() && l[0] != '#' && l.rfind("ell,", 0) != 0) r.push_back(l);
    return r;
}

}  // namespace

TEST_CASE("config round trip") {
    RunConfig c;
    c.command = "bounds";
    c.field = "8:0x11b";
    c.basis = "random:7";
    c.tree = "((*,*),*)";
    c.n = 3;
    c.transform = "conv:twisted-lch-newton";
    c.ell_min = 2;
    c.ell_max = 7;
    c.ell_step = 2;
    c.lambda = "0x0A";
    c.c = "05";
    c.b = 1;
    c.engine = "model";
    c.ignore_unit_head_guard = true;
    c.bounds = {"zero:adds", "newton_mul"};
    const RunConfig norm = normalize(c);
    CHECK(norm.field == "8:0x11B");
    CHECK(norm.lambda == "a");
    CHECK(norm.c == "5");
    CHECK(parse_run_config(to_string(c)) == norm);
    CHECK(parse_run_config(to_string(norm)) == norm);
    CHECK(parse_run_config(std::vector<std::string>{"counts"}) == normalize(RunConfig{}));

    const RunConfig explicit_basis = parse_run_config("construct --field 8 --basis 01,0x57");
    CHECK(explicit_basis.basis == "1,57");

    CHECK_THROWS_AS(parse_run_config("sing"), CliError);
    CHECK_THROWS_AS(parse_run_config("counts --engine guess"), CliError);
    CHECK_THROWS_AS(parse_run_config("counts --transform n2m"), CliError);
    CHECK_THROWS_AS(parse_run_config("counts --ell 0"), CliError);
    CHECK_THROWS_AS(parse_run_config("counts --b 2"), CliError);
}

TEST_CASE("construct") {
    const Outcome r = invoke({"construct", "--field", "16", "--basis", "cantor", "--n", "8"});
    CHECK(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 8);
    CHECK(out[0] == "1");

    CHECK(lines(invoke({"construct", "--field", "12", "--basis", "tower:1-12", "--n", "12"}).out).size() == 12);

    const Outcome bad = invoke({"construct", "--field", "12", "--basis", "cantor", "--n", "8"});
    CHECK(bad.code != 0);
    CHECK(bad.err.rfind("ERROR: ", 0) == 0);
    CHECK(bad.err.find("8 | 12") != std::string::npos);
}

TEST_CASE("verify") {
    const Outcome ok = invoke({"verify", "--field", "16", "--basis", "cantor", "--n", "3", "--tree", "cantor"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("0 failures") != std::string::npos);

    const Outcome shifted = invoke({"verify", "--field", "12", "--basis", "random:4", "--n", "3", "--lambda", "abc"});
    CHECK(shifted.code == 0);

    const Outcome invalid = invoke({"verify", "--field", "16", "--basis", "cantor", "--n", "4", "--tree", "((*,(*,*)),*)"});
    CHECK(invalid.code == 1);
    CHECK(invalid.err.find("validation failure") != std::string::npos);
}

TEST_CASE("counts") {
    const Outcome r = invoke({"counts", "--field", "16", "--basis", "cantor", "--n", "5", "--tree", "cantor", "--transform", "n2x"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# lchconv ", 0) == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 32);
    CHECK(rows[0] == "1,0,0");
    std::uint64_t prev = 0;
    for (const auto& row : rows) {
        const auto a = row.find(',');
        const std::uint64_t adds = std::stoull(row.substr(a + 1, row.find(',', a + 1) - a - 1));
        CHECK(adds >= prev);
        prev = adds;
    }
    CHECK(invoke({"counts", "--field", "16", "--basis", "cantor", "--n", "5", "--tree", "cantor", "--transform", "n2x"}).out == r.out);

    const Outcome model = invoke({"counts", "--field", "16", "--basis", "cantor", "--n", "5", "--tree", "cantor", "--engine", "model"});
    CHECK(data_rows(model.out) == rows);

    const Outcome conv = invoke({"counts", "--n", "3", "--transform", "conv:newton-monomial", "--ell", "8"});
    CHECK(conv.code == 0);
    CHECK(conv.out.find("ell,additions,multiplications,twist_multiplications") != std::string::npos);
    CHECK(data_rows(conv.out).size() == 1);

    const Outcome stepped = invoke({"counts", "--n", "4", "--transform", "l2x", "--c", "3", "--b", "1", "--ell", "4:16:4"});
    CHECK(data_rows(stepped.out).size() == 4);
}

TEST_CASE("bounds") {
    for (const char* t : {"n2x", "x2n", "l2x", "x2l", "x2m", "m2x", "taylor"}) {
        const Outcome r = invoke({"bounds", "--field", "16", "--basis", "random:3", "--n", "10", "--tree", "trivial", "--transform", t});
        CHECK_MESSAGE(r.code == 0, t, r.err);
    }
    const Outcome zero = invoke({"bounds", "--basis", "cantor", "--n", "6", "--tree", "cantor", "--transform", "x2m", "--bound", "zero"});
    CHECK(zero.code == 0);
    CHECK(zero.out.find("zero,muls,0,") != std::string::npos);

    const Outcome broken = invoke({"bounds", "--basis", "cantor", "--n", "4", "--transform", "x2m", "--bound", "zero:adds"});
    CHECK(broken.code == 1);
    CHECK(broken.err.rfind("ERROR: ", 0) == 0);
    CHECK(broken.err.find("exceeds") != std::string::npos);

    CHECK(invoke({"bounds", "--n", "4", "--bound", "fastest"}).code != 0);
}

TEST_CASE("trees") {
    const Outcome all = invoke({"trees", "--basis", "cantor", "--n", "4", "--tree", "all"});
    CHECK(all.code == 0);
    const auto rows = data_rows(all.out);
    CHECK(rows.size() == 5);
    int valid = 0;
    for (const auto& r : rows) valid += r.find("valid=yes") != std::string::npos;
    CHECK(valid == 3);

    const Outcome single = invoke({"trees", "--basis", "cantor", "--n", "4", "--tree", "((*,(*,*)),*)"});
    CHECK(single.code == 1);
    CHECK(single.out.find("splits=1,3 valid=no") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(invoke({"counts", "--transform", "n2q"}).code == 2);
    CHECK(invoke({"counts", "--n"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"counts", "--help"}).code == 0);
}

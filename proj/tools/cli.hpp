/**************************************************************************
 * cli.hpp
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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lch::cli {

/// Failure that ends a command; `what()` is the reason printed after `ERROR: `.
class CliError : public std::runtime_error {
public:
    CliError(const std::string& reason, int code = 2) : std::runtime_error(reason), exit_code_(code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

struct RunConfig {
    std::string command = "counts";
    std::string field = "16";
    std::string basis = "cantor";
    std::string tree = "trivial";
    unsigned n = 0;  // 0: taken from an explicit basis list
    std::string transform = "n2x";
    std::uint64_t ell_min = 1;
    std::uint64_t ell_max = 0;  // 0: 2^n
    std::uint64_t ell_step = 1;
    std::string lambda = "0";
    std::string c = "ell";  // `ell` or an integer, capped at ell per row
    unsigned b = 0;
    std::uint64_t taylor_t = 2;
    std::string engine = "measured";
    bool ignore_unit_head_guard = false;
    std::vector<std::string> bounds;  // id[:adds|:muls]
    std::string out = "-";

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"construct", "verify", "counts", "bounds", "trees"};
    return names;
}

/// Command name followed by flags, e.g. {"counts", "--n", "4"}. Throws CliError.
RunConfig parse_run_config(const std::vector<std::string>& args);
RunConfig parse_run_config(std::string_view line);
/// Canonical command line; parse_run_config(to_string(c)) == normalize(c).
std::string to_string(const RunConfig& config);
/// Canonical field spec and hex spellings; validates every field.
RunConfig normalize(const RunConfig& config);

int cmd_construct(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_counts(const RunConfig& config, std::ostream& out);
int cmd_bounds(const RunConfig& config, std::ostream& out);
int cmd_trees(const RunConfig& config, std::ostream& out);

/// Parses, dispatches and maps failures to `ERROR:` lines on err. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lch::cli

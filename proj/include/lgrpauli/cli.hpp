// Copyright 2026 The lgrpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lgrpauli::cli {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonCommuting = 3;
constexpr int kExitNotMaximal = 4;
constexpr int kExitVerifyFailed = 5;

enum class Format { kText, kCsv, kJson };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// The result of one command, renderable in every output format.
struct Report {
    /// Free-form lines printed before the table in text format.
    std::vector<std::string> lines;
    Table table;
    /// Text format prints the table after the lines unless this is off.
    bool table_in_text = true;
    nlohmann::ordered_json json;
    int exit_code = kExitOk;

    std::string render(Format format) const;
};

Report cmd_counts(size_t n);
Report cmd_generators(size_t n);
/// `n` = 0 infers N from the labels.
Report cmd_project(size_t n, const std::string &ops);
Report cmd_lift(size_t n, const std::string &point);
Report cmd_map(size_t n);
Report cmd_relations(size_t n);
Report cmd_constraints(size_t n);
Report cmd_coords(size_t n);
Report cmd_quadrics(size_t n);
Report cmd_orbits(size_t n);
Report cmd_tables(size_t n);
Report cmd_rank(size_t n, const std::string &point);
/// suite: "bijection", "variety", "tables", "cayley" or "all".
Report cmd_verify(size_t n, const std::string &suite);
Report cmd_cayley(size_t n);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace lgrpauli::cli

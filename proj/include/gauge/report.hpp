// Copyright 2026 The gauge Authors
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


#ifndef GAUGE_REPORT_HPP
#define GAUGE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace gauge {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct CheckResult {
    std::string name;
    bool pass = false;
    Json measured = Json::object();
    /// The property being checked, in words.
    std::string claim;
};

struct Report {
    std::string command;
    Json config = Json::object();
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    Json to_json() const;
    /// Two-space indented JSON with a trailing newline. No timings, so equal
    /// inputs give equal bytes.
    std::string json() const;
    /// One line per check.
    std::string summary() const;
};

/// Empty when `j` matches the report schema; otherwise one message per problem.
std::vector<std::string> validate_report(const nlohmann::json& j);

}  // namespace gauge

#endif

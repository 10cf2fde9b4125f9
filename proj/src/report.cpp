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


#include "gauge/report.hpp"

#include <set>
#include <sstream>

namespace gauge {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = config;
    j["pass"] = pass();
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json x;
        x["name"] = c.name;
        x["pass"] = c.pass;
        x["measured"] = c.measured;
        x["claim"] = c.claim;
        arr.push_back(std::move(x));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string Report::json() const { return to_json().dump(2) + "\n"; }

std::string Report::summary() const {
    std::ostringstream out;
    int failed = 0;
    for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        failed += !c.pass;
    }
    out << command << ": " << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

std::vector<std::string> validate_report(const nlohmann::json& j) {
    std::vector<std::string> err;
    if (!j.is_object()) return {"report is not an object"};
    auto need = [&](const nlohmann::json& o, const std::string& key, auto pred, const char* type,
                    const std::string& where) {
        if (!o.contains(key))
            err.push_back(where + ": missing '" + key + "'");
        else if (!pred(o[key]))
            err.push_back(where + ": '" + key + "' must be " + type);
    };
    auto is_int = [](const nlohmann::json& v) { return v.is_number_integer(); };
    auto is_str = [](const nlohmann::json& v) { return v.is_string(); };
    auto is_bool = [](const nlohmann::json& v) { return v.is_boolean(); };
    auto is_obj = [](const nlohmann::json& v) { return v.is_object(); };
    auto is_arr = [](const nlohmann::json& v) { return v.is_array(); };
    need(j, "schema_version", is_int, "an integer", "report");
    if (j.contains("schema_version") && j["schema_version"].is_number_integer() && j["schema_version"] != kSchemaVersion)
        err.push_back("report: unsupported schema_version " + j["schema_version"].dump());
    need(j, "command", is_str, "a string", "report");
    need(j, "config", is_obj, "an object", "report");
    need(j, "pass", is_bool, "a boolean", "report");
    need(j, "checks", is_arr, "an array", "report");
    static const std::set<std::string> top{"schema_version", "command", "config", "pass", "checks"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!top.count(it.key())) err.push_back("report: unknown key '" + it.key() + "'");
    if (!j.contains("checks") || !j["checks"].is_array()) return err;
    bool all = true;
    std::set<std::string> names;
    for (size_t i = 0; i < j["checks"].size(); ++i) {
        const auto& c = j["checks"][i];
        std::string where = "checks[" + std::to_string(i) + "]";
        if (!c.is_object()) {
            err.push_back(where + ": not an object");
            continue;
        }
        need(c, "name", is_str, "a string", where);
        need(c, "pass", is_bool, "a boolean", where);
        need(c, "measured", is_obj, "an object", where);
        need(c, "claim", is_str, "a string", where);
        if (c.contains("name") && c["name"].is_string() && !names.insert(c["name"].get<std::string>()).second)
            err.push_back(where + ": duplicate name " + c["name"].dump());
        if (c.contains("pass") && c["pass"].is_boolean()) all = all && c["pass"].get<bool>();
    }
    if (j.contains("pass") && j["pass"].is_boolean() && j["pass"].get<bool>() != all)
        err.push_back("report: 'pass' disagrees with the checks");
    return err;
}

}  // namespace gauge

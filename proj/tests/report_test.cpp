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

#include <gtest/gtest.h>

#include "gauge/suite.hpp"

using namespace gauge;

namespace {

ResolvedConfig cfg(const std::string& group, int n, int m, const std::string& bc, const std::string& twist = "",
                   const std::string& sub = "e") {
    RunConfig c;
    c.group = group;
    c.n = n;
    c.m = m;
    c.bc = bc;
    c.twist_even = twist;
    c.subgroup = sub;
    return resolve(c);
}

const nlohmann::json& check(const nlohmann::json& j, const std::string& name) {
    for (const auto& c : j["checks"])
        if (c["name"] == name) return c;
    throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(report, schema_rejects_malformed) {
    Report r{"code", Json::object(), {}};
    r.add({"a", true, {{"x", 1}}, "claim"});
    auto j = nlohmann::json::parse(r.json());
    EXPECT_TRUE(validate_report(j).empty());

    auto broken = j;
    broken["pass"] = false;
    EXPECT_FALSE(validate_report(broken).empty());
    broken = j;
    broken.erase("config");
    EXPECT_FALSE(validate_report(broken).empty());
    broken = j;
    broken["extra"] = 1;
    EXPECT_FALSE(validate_report(broken).empty());
    broken = j;
    broken["schema_version"] = 99;
    EXPECT_FALSE(validate_report(broken).empty());
    broken = j;
    broken["checks"].push_back(j["checks"][0]);
    EXPECT_FALSE(validate_report(broken).empty());
    broken = j;
    broken["checks"][0]["measured"] = 3;
    EXPECT_FALSE(validate_report(broken).empty());
    EXPECT_FALSE(validate_report(nlohmann::json::array()).empty());
}

TEST(report, pass_requires_every_check) {
    Report r{"x", Json::object(), {}};
    EXPECT_TRUE(r.pass());
    r.add({"a", true, Json::object(), ""});
    r.add({"b", false, Json::object(), ""});
    EXPECT_FALSE(r.pass());
    EXPECT_NE(r.summary().find("FAIL b"), std::string::npos);
    EXPECT_NE(r.summary().find("1/2"), std::string::npos);
}

TEST(report, code_examples) {
    auto j = nlohmann::json::parse(run_code(cfg("2", 2, 2, "torus")).json());
    EXPECT_TRUE(validate_report(j).empty());
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(check(j, "ground_dimension")["measured"]["ground_dimension"], 4);
    EXPECT_EQ(check(j, "all_commute")["measured"]["all_commute"], true);

    auto t = nlohmann::json::parse(run_code(cfg("2,2", 2, 2, "torus", "p12=1")).json());
    EXPECT_TRUE(t["pass"].get<bool>());
    EXPECT_EQ(check(t, "ground_dimension")["measured"]["ground_dimension"], 4);
}

TEST(report, identical_configs_identical_bytes) {
    auto c = cfg("3", 2, 3, "cylinder");
    EXPECT_EQ(run_compose(c).json(), run_compose(c).json());
    auto b = cfg("2,2", 2, 3, "cylinder", "", "0,0;1,1");
    EXPECT_EQ(run_boundary(b).json(), run_boundary(b).json());
}

TEST(report, every_command_validates) {
    std::vector<Report> reps{
        run_code(cfg("2,2", 3, 4, "torus", "p12=1")),
        run_compose(cfg("2", 3, 3, "cylinder")),
        run_anyons(cfg("2", 3, 4, "torus")),
        run_confine(cfg("2,2", 4, 8, "torus", "p12=1")),
        run_boundary(cfg("4", 3, 3, "cylinder", "", "0;2")),
        run_tn(cfg("2", 2, 2, "cylinder"), true, std::string("M_e")),
    };
    for (const auto& r : reps) {
        auto j = nlohmann::json::parse(r.json());
        EXPECT_TRUE(validate_report(j).empty()) << r.command;
        EXPECT_TRUE(r.pass()) << r.summary();
        for (const auto& c : r.checks) EXPECT_FALSE(c.claim.empty()) << c.name;
    }
}

TEST(report, command_preconditions) {
    EXPECT_THROW(run_boundary(cfg("2", 2, 2, "torus")), ConfigError);
    EXPECT_THROW(run_anyons(cfg("2", 2, 4, "torus")), ConfigError);
    EXPECT_THROW(run_confine(cfg("2,2", 4, 4, "torus", "p12=1")), ConfigError);
}

TEST(report, twisted_dimension_follows_row_parity) {
    // Two twisted rows cancel for an order-2 class.
    auto j = nlohmann::json::parse(run_code(cfg("2,2", 2, 4, "torus", "p12=1")).json());
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(check(j, "ground_dimension")["measured"]["ground_dimension"], 16);
    // Three rows of an order-3 class.
    auto k = nlohmann::json::parse(run_code(cfg("3,3", 2, 6, "torus", "p12=1")).json());
    EXPECT_TRUE(k["pass"].get<bool>());
    EXPECT_EQ(check(k, "ground_dimension")["measured"]["ground_dimension"], 81);
}

TEST(report, criteria_listed_once) {
    const auto& all = acceptance_criteria();
    ASSERT_EQ(all.size(), 13u);
    for (size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].id, static_cast<int>(i) + 1);
}

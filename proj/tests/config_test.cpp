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


#include "gauge/config.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace gauge;

TEST(config, group_parsing) {
    EXPECT_EQ(parse_group("2,2"), GroupSpec({2, 2}));
    EXPECT_EQ(parse_group(" 4 , 2 "), GroupSpec({4, 2}));
    EXPECT_THROW(parse_group(""), ConfigError);
    EXPECT_THROW(parse_group("1"), ConfigError);
    EXPECT_THROW(parse_group("2,x"), ConfigError);
    EXPECT_THROW(parse_group("2,,2"), ConfigError);
}

TEST(config, twist_parsing) {
    GroupSpec g({2, 2, 2});
    EXPECT_TRUE(parse_twist(g, "").is_trivial());
    EXPECT_EQ(parse_twist(g, "p12=1").upper(), (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(parse_twist(g, "p23=1,p13=1").upper(), (std::vector<int>{0, 1, 1}));
    EXPECT_THROW(parse_twist(g, "p21=1"), ConfigError);
    EXPECT_THROW(parse_twist(g, "p14=1"), ConfigError);
    EXPECT_THROW(parse_twist(g, "p12=2"), SpecError);
    EXPECT_THROW(parse_twist(GroupSpec({2}), "p12=1"), ConfigError);
    EXPECT_THROW(parse_twist(g, "q12=1"), ConfigError);
}

TEST(config, subgroup_parsing) {
    GroupSpec g({2, 2});
    EXPECT_EQ(parse_subgroup(g, "e").size(), 1u);
    EXPECT_EQ(parse_subgroup(g, "all").size(), 4u);
    auto h = parse_subgroup(g, "1,1;0,0");
    ASSERT_EQ(h.size(), 2u);
    EXPECT_TRUE(h[0].is_identity());
    EXPECT_THROW(parse_subgroup(g, "1,0"), ConfigError);          // no identity
    EXPECT_THROW(parse_subgroup(g, "0,0;1,0;0,1"), ConfigError);  // not closed
    EXPECT_THROW(parse_subgroup(g, "0,0;2,0"), SpecError);
    EXPECT_THROW(parse_subgroup(g, "0"), ConfigError);
}

TEST(config, boundary_names) {
    EXPECT_EQ(parse_bc("torus"), std::make_pair(Boundary::Periodic, Boundary::Periodic));
    EXPECT_EQ(parse_bc("cylinder"), std::make_pair(Boundary::Open, Boundary::Periodic));
    EXPECT_EQ(parse_bc("periodic"), parse_bc("cylinder"));
    EXPECT_EQ(parse_bc("open"), std::make_pair(Boundary::Open, Boundary::Open));
    EXPECT_THROW(parse_bc("sphere"), ConfigError);
}

TEST(config, env_cap) {
    ::unsetenv("GAUGE_MAX_DIM");
    EXPECT_EQ(max_dim_from_env(7), 7u);
    ::setenv("GAUGE_MAX_DIM", "4096", 1);
    EXPECT_EQ(max_dim_from_env(7), 4096u);
    ::setenv("GAUGE_MAX_DIM", "2^20", 1);
    EXPECT_EQ(max_dim_from_env(7), uint64_t(1) << 20);
    ::setenv("GAUGE_MAX_DIM", "lots", 1);
    EXPECT_THROW(max_dim_from_env(7), ConfigError);
    ::setenv("GAUGE_MAX_DIM", "0", 1);
    EXPECT_THROW(max_dim_from_env(7), ConfigError);
    ::unsetenv("GAUGE_MAX_DIM");
}

TEST(config, defaults_and_resolve) {
    RunConfig c;
    EXPECT_EQ(c.tolerance, 1e-10);
    EXPECT_EQ(c.max_dim, uint64_t(1) << 24);
    auto r = resolve(c);
    EXPECT_EQ(r.group, GroupSpec({2}));
    EXPECT_EQ(r.vertical, Boundary::Periodic);
    EXPECT_TRUE(r.alpha.is_trivial());
    EXPECT_EQ(r.subgroup.size(), 1u);
}

TEST(config, resolve_rejects) {
    auto bad = [](auto edit) {
        RunConfig c;
        edit(c);
        EXPECT_THROW(resolve(c), ConfigError);
    };
    bad([](RunConfig& c) { c.m = 3; });  // odd torus
    bad([](RunConfig& c) { c.element = 2; });
    bad([](RunConfig& c) { c.character = -1; });
    bad([](RunConfig& c) { c.tolerance = 0; });
    bad([](RunConfig& c) { c.tolerance = 0.1; });
    bad([](RunConfig& c) { c.max_dim = 0; });
    bad([](RunConfig& c) { c.threads = -1; });
    bad([](RunConfig& c) { c.subgroup = "1"; });
    bad([](RunConfig& c) { c.n = 1; });
    RunConfig ok;
    ok.bc = "cylinder";
    ok.m = 3;
    EXPECT_NO_THROW(resolve(ok));
}

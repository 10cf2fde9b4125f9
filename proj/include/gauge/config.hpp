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


#ifndef GAUGE_CONFIG_HPP
#define GAUGE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauge/errors.hpp"
#include "gauge/group.hpp"
#include "gauge/lattice.hpp"

namespace gauge {

/// A bad flag value. Carries the message shown to the user.
class ConfigError : public SpecError {
   public:
    using SpecError::SpecError;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr uint64_t kDefaultSeed = 20260114;

struct RunConfig {
    std::string group = "2";
    int n = 2;
    int m = 2;
    /// torus | cylinder (vertically open, horizontally periodic) | open.
    std::string bc = "torus";
    std::string twist_even;  // "p12=1,p13=0"; empty = trivial
    std::string twist_odd;
    std::string twist_beta;
    /// "e", "all", or element exponents "0,0;1,1".
    std::string subgroup = "e";
    int element = 1;
    int character = 1;
    std::string tensor = "all";
    std::optional<std::string> output;
    uint64_t max_dim = uint64_t(1) << 24;
    double tolerance = kDefaultTolerance;
    uint64_t seed = kDefaultSeed;
    int threads = 0;
};

/// A validated config.
struct ResolvedConfig {
    RunConfig raw;
    GroupSpec group;
    Boundary vertical = Boundary::Periodic;
    Boundary horizontal = Boundary::Periodic;
    Cocycle alpha, gamma, beta;
    std::vector<GroupElement> subgroup;
};

/// "2,2" -> Z2 x Z2. Orders must be >= 2.
GroupSpec parse_group(const std::string& s);
/// "p12=1,p23=2" (1-based factor indices, i < j) -> cocycle; "" is trivial.
Cocycle parse_twist(const GroupSpec& g, const std::string& s);
/// "e", "all", or ';'-separated exponent tuples that must form a subgroup.
std::vector<GroupElement> parse_subgroup(const GroupSpec& g, const std::string& s);
/// Returns (vertical, horizontal).
std::pair<Boundary, Boundary> parse_bc(const std::string& s);
/// GAUGE_MAX_DIM if set (a positive integer or 2^k), else `fallback`.
uint64_t max_dim_from_env(uint64_t fallback);

/// Throws ConfigError with an actionable message.
ResolvedConfig resolve(const RunConfig& c);

}  // namespace gauge

#endif

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


#ifndef GAUGE_SUITE_HPP
#define GAUGE_SUITE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gauge/config.hpp"
#include "gauge/report.hpp"

namespace gauge {

Json config_json(const ResolvedConfig& c);

Report run_code(const ResolvedConfig& c);
Report run_compose(const ResolvedConfig& c);
Report run_anyons(const ResolvedConfig& c);
Report run_confine(const ResolvedConfig& c);
Report run_boundary(const ResolvedConfig& c);
/// `dump`: also embed this tensor (name as in build_tensor) in the report.
Report run_tn(const ResolvedConfig& c, bool pull_through, const std::optional<std::string>& dump);

struct SuiteOptions {
    uint64_t max_dim = uint64_t(1) << 24;
    double tolerance = kDefaultTolerance;
    uint64_t seed = kDefaultSeed;
};

struct Criterion {
    int id;
    std::string name;
    std::function<CheckResult(const SuiteOptions&)> run;
};

/// Criteria 1..13. The last one (total runtime) is added by run_suite.
const std::vector<Criterion>& acceptance_criteria();

inline constexpr double kSuiteTimeLimitSeconds = 300.0;

/// Runs every criterion. `on_result` sees each check with its elapsed seconds
/// (timings stay out of the report).
Report run_suite(const SuiteOptions& opts,
                 const std::function<void(const CheckResult&, double)>& on_result = nullptr);

}  // namespace gauge

#endif

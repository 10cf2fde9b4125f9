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


// gauge: command-line front end. Reports go to stdout as JSON unless -o is
// given, in which case the JSON goes to the file and the summary to stdout.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gauge/config.hpp"
#include "gauge/kernels.hpp"
#include "gauge/suite.hpp"

namespace {

void add_common(CLI::App* app, gauge::RunConfig& c) {
    app->add_option("--group", c.group, "cyclic orders, e.g. 2,2")->capture_default_str();
    app->add_option("--n", c.n, "sites per row")->capture_default_str();
    app->add_option("--m,--layers", c.m, "rows (compose: number of maps)")->capture_default_str();
    app->add_option("--bc", c.bc, "torus | cylinder | open")->capture_default_str();
    app->add_option("--twist-even", c.twist_even, "cocycle on even rows, e.g. p12=1");
    app->add_option("--twist-odd", c.twist_odd, "cocycle on odd rows");
    app->add_option("--twist-beta", c.twist_beta, "boundary cocycle");
    app->add_option("--subgroup", c.subgroup, "boundary subgroup: e, all, or 0,0;1,1")->capture_default_str();
    app->add_option("--element", c.element, "group element index")->capture_default_str();
    app->add_option("--character", c.character, "character index")->capture_default_str();
    app->add_option("-o,--output,--report", c.output, "write the JSON report here");
    app->add_option("--max-dim", c.max_dim, "amplitude cap")->capture_default_str();
    app->add_option("--tol", c.tolerance, "float tolerance")->capture_default_str();
    app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    app->add_option("--threads", c.threads, "OpenMP threads, 0 = runtime default")->capture_default_str();
}

int emit(const gauge::Report& rep, const std::optional<std::string>& out) {
    if (out) {
        std::ofstream f(*out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << *out << "\n";
            return 2;
        }
        f << rep.json();
        std::cout << rep.summary();
    } else {
        std::cout << rep.json();
        std::cerr << rep.summary();
    }
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge: iterative gauging and generalized XZZX codes"};
    app.require_subcommand(1);
    gauge::RunConfig cfg;
    bool pull_through = false;
    std::optional<std::string> dump;

    std::vector<CLI::App*> subs;
    for (const char* name : {"compose", "code", "anyons", "confine", "boundary", "tn", "suite"}) {
        auto* s = app.add_subcommand(name);
        add_common(s, cfg);
        subs.push_back(s);
    }
    subs[0]->description("compose gauging maps on a fixed-point state and verify the result");
    subs[1]->description("build the stabilizer code and count ground states");
    subs[2]->description("single excitations and braiding phases");
    subs[3]->description("confinement of twisted excitations");
    subs[4]->description("boundary terms and anyon condensation");
    subs[5]->description("tensor network checks");
    subs[5]->add_flag("--check-pull-through", pull_through, "verify the tensor symmetry relations");
    subs[5]->add_option("--tensor", cfg.tensor, "M~ | M_e | M_o | T_e | T_o | M_e/T_o | M_o/T_e | all")
        ->capture_default_str();
    subs[5]->add_option("--dump", dump, "embed this tensor's entries in the report");
    subs[6]->description("run the full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.max_dim = gauge::max_dim_from_env(cfg.max_dim);
        gauge::kernels::set_threads(cfg.threads);
        if (subs[6]->parsed()) {
            gauge::SuiteOptions o{cfg.max_dim, cfg.tolerance, cfg.seed};
            if (!(o.tolerance > 0.0) || o.tolerance > 1e-3) throw gauge::ConfigError("--tol: must be in (0, 1e-3]");
            auto rep = gauge::run_suite(o, [](const gauge::CheckResult& r, double secs) {
                std::fprintf(stderr, "%s %-38s %8.2fs\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), secs);
            });
            if (cfg.output) return emit(rep, cfg.output);
            std::cout << rep.json();
            return rep.pass() ? 0 : 1;
        }
        gauge::RunConfig rc = cfg;
        // The composed lattice is always open at the top and bottom.
        if (subs[0]->parsed() && rc.bc == "torus") rc.bc = "cylinder";
        auto c = gauge::resolve(rc);
        gauge::Report rep;
        if (subs[0]->parsed()) rep = gauge::run_compose(c);
        if (subs[1]->parsed()) rep = gauge::run_code(c);
        if (subs[2]->parsed()) rep = gauge::run_anyons(c);
        if (subs[3]->parsed()) rep = gauge::run_confine(c);
        if (subs[4]->parsed()) rep = gauge::run_boundary(c);
        if (subs[5]->parsed()) rep = gauge::run_tn(c, pull_through, dump);
        return emit(rep, cfg.output);
    } catch (const gauge::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gauge::CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --max-dim or GAUGE_MAX_DIM)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

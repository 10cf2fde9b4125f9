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


#include "gauge/suite.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "gauge/boundary.hpp"
#include "gauge/excitations.hpp"
#include "gauge/finite_group.hpp"
#include "gauge/gauging.hpp"
#include "gauge/kernels.hpp"
#include "gauge/tensor_network.hpp"

namespace gauge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string group_name(const GroupSpec& g) { return g.str(); }

std::vector<int> exps_json(const GroupElement& g) { return g.exps(); }

Json labels_json(const std::vector<PlaquetteLabel>& ls) {
    Json a = Json::array();
    for (const auto& l : ls) a.push_back(l.str());
    return a;
}

std::optional<Cocycle> nontrivial(const Cocycle& c) {
    if (c.is_trivial()) return std::nullopt;
    return c;
}

// A torus with one twisted row family of k rows: the twist classes add up
// to k alpha, and the ground space has |G| * |ker slant(k alpha)| states.
uint64_t single_twist_dimension(const Cocycle& alpha, int k) {
    const GroupSpec& G = alpha.group();
    uint64_t ker = 0;
    for (const auto& g : elements(G)) {
        const Exps e = slant_product(alpha, g).exps();
        bool trivial = true;
        for (size_t i = 0; i < e.size(); ++i) trivial = trivial && (int64_t(k) * e[i]) % G.orders()[i] == 0;
        ker += trivial;
    }
    return uint64_t(G.order()) * ker;
}

CodeSpec make_code(const ResolvedConfig& c) {
    CodeSpec spec = CodeSpec::untwisted(Lattice2D(c.group, c.raw.n, c.raw.m, c.vertical, c.horizontal));
    spec.alpha = c.alpha;
    spec.gamma = c.gamma;
    spec.beta = c.beta;
    if (c.vertical == Boundary::Open) spec.boundary_subgroup = c.subgroup;
    return spec;
}

uint64_t dim_of(const GroupSpec& g, int sites) {
    uint64_t d = 1;
    for (int s = 0; s < sites; ++s) {
        if (d > (uint64_t(1) << 62) / g.order()) return UINT64_MAX;
        d *= g.order();
    }
    return d;
}

StateVector vertex_row(const GroupSpec& G, int n) {
    return StateVector(std::vector<SiteKind>(n, SiteKind::VertexDual), std::vector<int>(n, G.order()));
}

StateVector random_vertex_row(const GroupSpec& G, int n, std::mt19937_64& rng) {
    StateVector s = vertex_row(G, n);
    std::normal_distribution<double> nd;
    for (auto& a : s.amps()) a = {nd(rng), nd(rng)};
    s.normalize();
    return s;
}

// Group plaquettes of one element, multiplied together.
ProductOperator group_plaquette_product(const CodeSpec& spec, const GroupElement& g) {
    ProductOperator prod;
    for (const auto& p : bulk_plaquettes(spec))
        if (p.label.type == PlaquetteType::Group) prod = p.ops[g.index()] * prod;
    return prod;
}

double stabilizer_deviation(const std::vector<StabilizerTerm>& terms, const StateVector& psi) {
    double nrm = psi.norm();
    double worst = 0;
    for (const auto& t : terms)
        worst = std::max(worst, std::abs(expectation(t.op, psi) / (nrm * nrm) - 1.0));
    return worst;
}

// ------------------------------------------------------------ criteria

CheckResult c01(const SuiteOptions&) {
    auto t0 = Clock::now();
    int64_t instances = 0, pairs = 0, failures = 0;
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {2, 3}}) {
        GroupSpec G(orders);
        auto classes = enumerate_cocycle_classes(G);
        for (int n : {2, 3, 4})
            for (int m : {2, 4})
                for (const auto& a : classes)
                    for (const auto& gm : classes) {
                        CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, n, m, Boundary::Periodic, Boundary::Periodic));
                        spec.alpha = a;
                        spec.gamma = gm;
                        auto rep = check_all_commute(build_bulk_stabilizers(spec));
                        ++instances;
                        pairs += rep.pairs_checked;
                        failures += static_cast<int64_t>(rep.failures.size());
                    }
    }
    bool fast = seconds_since(t0) < 10.0;
    CheckResult r{"stabilizer_commutation", failures == 0 && fast, Json::object(),
                  "all bulk terms commute exactly on every torus, twisted or not, in under 10 s"};
    r.measured = {{"instances", instances}, {"pairs", pairs}, {"failures", failures}, {"within_10s", fast}};
    return r;
}

CheckResult c02(const SuiteOptions&) {
    int64_t instances = 0, dense_checked = 0;
    Json bad = Json::array();
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {2, 3}}) {
        GroupSpec G(orders);
        for (int n : {2, 3, 4})
            for (int m : {2, 4}) {
                CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, n, m, Boundary::Periodic, Boundary::Periodic));
                auto d = ground_space_dimension(spec);
                uint64_t want = uint64_t(G.order()) * G.order();
                ++instances;
                bool ok = d.dimension == want;
                if (dim_of(G, spec.lattice.site_count()) <= (uint64_t(1) << 14)) {
                    DimensionOptions o;
                    o.method = DimensionMethod::DenseOracle;
                    o.dense_cap = uint64_t(1) << 14;
                    ok = ok && ground_space_dimension(spec, o).dimension == d.dimension;
                    ++dense_checked;
                }
                if (!ok) bad.push_back({{"group", G.str()}, {"n", n}, {"m", m}, {"dimension", d.dimension}});
            }
    }
    CheckResult r{"ground_degeneracy_untwisted", bad.empty(), Json::object(),
                  "untwisted torus ground space has dimension |G|^2, dense oracle agrees"};
    r.measured = {{"instances", instances}, {"dense_checked", dense_checked}, {"mismatches", bad}};
    return r;
}

CheckResult c03(const SuiteOptions&) {
    GroupSpec G({2, 2});
    Json rows = Json::array();
    bool ok = true;
    for (int n : {2, 3, 4})
        for (int m : {2, 4, 6, 8}) {
            CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, n, m, Boundary::Periodic, Boundary::Periodic));
            spec.alpha = Cocycle(G, {1});
            auto d = ground_space_dimension(spec);
            uint64_t want = single_twist_dimension(spec.alpha, m / 2);
            Json row = {{"n", n}, {"m", m}, {"dimension", d.dimension}, {"expected", want},
                        {"method", dimension_method_name(d.method)}};
            bool this_ok = d.dimension == want && (m % 4 != 2 || d.dimension == 4);
            if (n == 2 && m <= 4) {
                DimensionOptions o;
                o.method = DimensionMethod::DenseOracle;
                o.dense_cap = uint64_t(1) << 16;
                auto dense = ground_space_dimension(spec, o).dimension;
                row["dense_oracle"] = dense;
                this_ok = this_ok && dense == d.dimension;
            }
            ok = ok && this_ok;
            rows.push_back(row);
        }
    CheckResult r{"ground_degeneracy_twisted", ok, Json::object(),
                  "twisted Z2 x Z2 torus has |G| = 4 ground states with an odd number of twisted rows; "
                  "with an even number the twists cancel and |G|^2 = 16 return"};
    r.measured = {{"instances", rows}};
    return r;
}

CheckResult c04(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed);
    double worst = 0;
    Json done = Json::array(), skipped = Json::array();
    struct Case {
        std::vector<int> g;
        int n, m;
        Boundary bc;
    };
    std::vector<Case> cases;
    for (auto g : std::vector<std::vector<int>>{{2}, {3}})
        for (int n : {2, 3})
            for (int m = 2; m <= 4; ++m) cases.push_back({g, n, m, Boundary::Periodic});
    for (int m = 2; m <= 4; ++m) cases.push_back({{2}, 2, m, Boundary::Open});
    for (const auto& c : cases) {
        GroupSpec G(c.g);
        auto layers = make_layers(c.n, c.m, c.bc);
        Lattice2D lat(G, c.n, c.m, Boundary::Open, c.bc);
        Json id = {{"group", G.str()}, {"n", c.n}, {"m", c.m}, {"bc", boundary_name(c.bc)}};
        if (dim_of(G, lat.site_count()) > o.max_dim) {
            skipped.push_back(id);
            continue;
        }
        auto out = compose_gauging(G, layers, random_vertex_row(G, c.n, rng), o.max_dim);
        CodeSpec spec = CodeSpec::untwisted(out.lattice);
        double dev = stabilizer_deviation(build_bulk_stabilizers(spec), out.state);
        worst = std::max(worst, dev);
        id["max_deviation"] = dev;
        done.push_back(id);
    }
    CheckResult r{"gauged_state_frustration_free", worst < o.tolerance, Json::object(),
                  "the composed state is a +1 eigenstate of every bulk term"};
    r.measured = {{"instances", done}, {"skipped_over_cap", skipped}, {"max_deviation", worst}};
    return r;
}

CheckResult c05(const SuiteOptions&) {
    int64_t maps = 0;
    Json bad = Json::array();
    auto run = [&](const GroupSpec& G, const LayerSpec& l) {
        auto rep = verify_emergent_symmetry(GaugingMap(G, l));
        ++maps;
        if (!rep.pass())
            bad.push_back({{"group", G.str()}, {"layer", l.index}, {"n", l.n}, {"twisted", l.twist.has_value()}});
    };
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {4}})
        for (int j = 0; j < 2; ++j)
            for (int n : {2, 3})
                for (Boundary bc : {Boundary::Periodic, Boundary::Open}) run(GroupSpec(orders), {j, n, bc, std::nullopt});
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2}, {4, 2}}) {
        GroupSpec G(orders);
        for (const auto& a : enumerate_cocycle_classes(G)) {
            if (a.is_trivial()) continue;
            for (int j = 0; j < 2; ++j)
                for (Boundary bc : {Boundary::Periodic, Boundary::Open}) run(G, {j, 2, bc, a});
        }
    }
    CheckResult r{"emergent_dual_symmetry", bad.empty(), Json::object(),
                  "every gauging map intertwines with the product of Z on the new row, twisted or not"};
    r.measured = {{"maps", maps}, {"failures", bad}};
    return r;
}

CheckResult c06(const SuiteOptions&) {
    int64_t checked = 0;
    Json bad = Json::array();
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}})
        for (int j = 0; j < 2; ++j)
            for (Boundary bc : {Boundary::Periodic, Boundary::Open}) {
                GroupSpec G(orders);
                LayerSpec l{j, 3, bc, std::nullopt};
                for (int i = 0; i < 3; ++i)
                    for (int i2 = i + 1; i2 < 3; ++i2)
                        for (int a = 0; a < G.order(); ++a) {
                            auto rep = verify_string_order_mapping(G, l, i, i2, a);
                            ++checked;
                            if (!rep.pass())
                                bad.push_back({{"group", G.str()}, {"layer", j}, {"i", i}, {"i2", i2}, {"a", a}});
                        }
            }
    CheckResult r{"string_order_mapping", bad.empty(), Json::object(),
                  "two-point correlators map to string operators through the gauging map, exactly, at N = 3"};
    r.measured = {{"checked", checked}, {"failures", bad}};
    return r;
}

CheckResult c07(const SuiteOptions&) {
    int64_t checked = 0;
    Json bad = Json::array();
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2}, {4, 2}}) {
        GroupSpec G(orders);
        for (const auto& a : enumerate_cocycle_classes(G))
            for (int n : {2, 3})
                for (int m : {2, 4}) {
                    CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, n, m, Boundary::Periodic, Boundary::Periodic));
                    spec.alpha = a;
                    for (const auto& g : elements(G)) {
                        ProductOperator want;
                        auto chi = slant_product(a, g);
                        for (const auto& s : spec.lattice.sites())
                            if (s.kind == SiteKind::EdgeGroup) want.times(spec.lattice.site_or_throw(s.row, s.x), clock_z(chi));
                        ++checked;
                        if (group_plaquette_product(spec, g) != want)
                            bad.push_back({{"group", G.str()}, {"alpha", a.str()}, {"n", n}, {"m", m}, {"g", g.str()}});
                    }
                }
    }
    CheckResult r{"twisted_plaquette_product", bad.empty(), Json::object(),
                  "the product of all Group plaquettes of g is Z of the slant product on every edge site"};
    r.measured = {{"checked", checked}, {"failures", bad}};
    return r;
}

CheckResult c08(const SuiteOptions&) {
    GroupSpec G({2, 2});
    CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, 4, 8, Boundary::Periodic, Boundary::Periodic));
    spec.alpha = Cocycle(G, {1});
    bool ok = true;
    Json rows = Json::array();
    for (int g = 1; g < G.order(); ++g) {
        auto rep = confinement_report(spec, GroupElement::from_index(G, g));
        bool this_ok = rep.single_count == 3 && rep.horizontal_growing() && rep.dipole_constant() &&
                       rep.dipole_braids_trivially;
        ok = ok && this_ok;
        rows.push_back({{"g", rep.g.str()},
                        {"single_count", rep.single_count},
                        {"horizontal_counts", rep.horizontal_counts},
                        {"dipole_counts", rep.dipole_counts},
                        {"dipole_braids_trivially", rep.dipole_braids_trivially}});
    }
    CheckResult r{"confinement", ok, Json::object(),
                  "twisted single excitations violate 3 terms, strings grow linearly, dipoles move freely"};
    r.measured = {{"elements", rows}};
    return r;
}

CheckResult c09(const SuiteOptions&) {
    int64_t checked = 0;
    Json bad = Json::array();
    std::optional<Phase> z2;
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {4}}) {
        GroupSpec G(orders);
        CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, 3, 6, Boundary::Periodic, Boundary::Periodic));
        for (int g = 0; g < G.order(); ++g)
            for (int c = 0; c < G.order(); ++c) {
                auto xs = vertical_path(spec.lattice, 1, 1, 3, StringFlavor::X, g);
                auto zs = horizontal_path(spec.lattice, 1, 1, 2, StringFlavor::Z, c);
                Phase p = braiding_phase(spec, zs, xs);
                ++checked;
                if (p != pair(DualCharacter::from_index(G, c), GroupElement::from_index(G, g)))
                    bad.push_back({{"group", G.str()}, {"g", g}, {"chi", c}, {"phase", p.str()}});
                if (G.order() == 2 && g == 1 && c == 1) z2 = p;
            }
    }
    bool z2_ok = z2 && *z2 == Phase(1, 2);
    CheckResult r{"braiding", bad.empty() && z2_ok, Json::object(),
                  "one crossing of X_g and Z_chi strings gives chi(g); -1 for Z2"};
    r.measured = {{"checked", checked}, {"z2_phase", z2 ? z2->str() : "none"}, {"failures", bad}};
    return r;
}

CheckResult c10(const SuiteOptions&) {
    int64_t subgroups = 0;
    Json bad = Json::array();
    bool full_empty = true;
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {4}, {2, 2}}) {
        GroupSpec G(orders);
        Cocycle beta = Cocycle::trivial(G);
        CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, 2, 3, Boundary::Open, Boundary::Periodic));
        for (const auto& h : enumerate_subgroups(G)) {
            ++subgroups;
            auto s = build_fixed_point_state(G, h, 3);
            auto surv = surviving_boundary_terms(s, beta);
            bool ok = surv.surviving == restriction_kernel(G, h);
            auto cond = condensation_table(spec, s);
            ok = ok && cond.pass();
            std::set<int> hs, blocked;
            for (const auto& e : h) hs.insert(e.index());
            for (const auto& a : cond.anyons) {
                if (a.type != "g") continue;
                bool in_h = hs.count(a.label) > 0;
                ok = ok && a.condenses == in_h && (in_h || !a.violated.empty());
            }
            if (static_cast<int>(h.size()) == G.order())
                full_empty = full_empty && surv.surviving.size() == 1 && surv.surviving[0].is_trivial();
            if (!ok) bad.push_back({{"group", G.str()}, {"subgroup_order", h.size()}});
        }
    }
    CheckResult r{"boundary_condensation", bad.empty() && full_empty, Json::object(),
                  "surviving boundary terms are the characters trivial on H; g-anyons condense iff g is in H"};
    r.measured = {{"subgroups", subgroups}, {"full_group_boundary_empty", full_empty}, {"failures", bad}};
    return r;
}

CheckResult c11(const SuiteOptions& o) {
    std::mt19937_64 rng(o.seed + 11);
    int64_t identities = 0, identity_failures = 0, layers_checked = 0;
    double max_dev = 0, worst_fid = 0;
    Json bad = Json::array();
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {4}}) {
        auto rep = pull_through_check("all", GroupSpec(orders));
        identities += static_cast<int64_t>(rep.checks.size());
        identity_failures += rep.failures();
        max_dev = std::max(max_dev, rep.max_deviation());
    }
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}})
        for (int n : {2, 3})
            for (int j = 0; j < 2; ++j)
                for (Boundary bc : {Boundary::Periodic, Boundary::Open}) {
                    GroupSpec G(orders);
                    LayerSpec l{j, n, bc, std::nullopt};
                    auto mpo = contract_mpo_layer(G, l, o.max_dim);
                    auto ref = GaugingMap(G, l, o.max_dim).exact_matrix();
                    double c = mpo_normalization(G, l);
                    ++layers_checked;
                    if (!equal_entries(mpo, ref) || !(c > 0) || std::abs(mpo.scale * c - ref.scale) > 1e-12 * ref.scale)
                        bad.push_back({{"group", G.str()}, {"n", n}, {"layer", j}, {"bc", boundary_name(bc)}});
                }
    Json pepes = Json::array();
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}})
        for (Boundary bc : {Boundary::Periodic, Boundary::Open}) {
            GroupSpec G(orders);
            auto layers = make_layers(2, 2, bc);
            auto in = random_vertex_row(G, 2, rng);
            auto ref = compose_gauging(G, layers, in, o.max_dim);
            auto got = contract_pepes(assemble_pepes(G, layers), in, o.max_dim);
            double dev = 1.0 - fidelity(got, ref.state);
            worst_fid = std::max(worst_fid, dev);
            pepes.push_back({{"group", G.str()}, {"bc", boundary_name(bc)}, {"fidelity_deviation", dev}});
        }
    bool ok = identity_failures == 0 && max_dev == 0.0 && bad.empty() && worst_fid < o.tolerance;
    CheckResult r{"tensor_network_equivalence", ok, Json::object(),
                  "tensor symmetries hold exactly; MPO layers equal the gauging maps; PEPES contraction equals the "
                  "composed state"};
    r.measured = {{"identities", identities},
                  {"identity_failures", identity_failures},
                  {"max_entry_deviation", max_dev},
                  {"mpo_layers", layers_checked},
                  {"mpo_failures", bad},
                  {"pepes", pepes}};
    return r;
}

CheckResult c12(const SuiteOptions&) {
    int64_t pairs = 0;
    Json bad = Json::array();
    auto oracle = [](const FiniteGroup& g, const std::vector<ClassFunction>& t, int s, int r) {
        std::vector<int64_t> out;
        for (const auto& c : t) {
            std::complex<double> acc = 0.0;
            for (int a = 0; a < g.order(); ++a)
                acc += t[s].values[a].to_complex() * t[r].values[a].to_complex() * std::conj(c.values[a].to_complex());
            out.push_back(std::llround(acc.real() / g.order()));
        }
        return out;
    };
    GroupSpec v({2, 2});
    std::vector<std::pair<FiniteGroup, std::vector<ClassFunction>>> cases{{FiniteGroup::s3(), s3_characters()},
                                                                          {FiniteGroup::from_abelian(v), abelian_characters(v)}};
    for (const auto& [g, t] : cases)
        for (int n : {2, 3})
            for (const auto& f : verify_fusion(g, t, n)) {
                ++pairs;
                if (!f.holds || f.coefficients != oracle(g, t, f.sigma, f.rho))
                    bad.push_back({{"group", g.name()}, {"n", n}, {"sigma", f.sigma}, {"rho", f.rho}});
            }
    CheckResult r{"rep_fusion", bad.empty(), Json::object(),
                  "flux operators fuse like characters: Gamma_s Gamma_r = sum N Gamma_c"};
    r.measured = {{"pairs", pairs}, {"failures", bad}};
    return r;
}

CheckResult c13(const SuiteOptions& o) {
    double worst = 0;
    Json rows = Json::array();
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {4}}) {
        GroupSpec G(orders);
        StateVector psi = StateVector::basis({SiteKind::VertexDual}, {G.order()}, {0});
        for (int n = 1; n <= 3; ++n) {
            StateVector s = zero_dim_gauge(G, psi, n);
            double dev = 0;
            // Cutting after c of the outer sites crosses c pairs.
            for (int c = 1; c <= n; ++c)
                dev = std::max(dev, std::abs(entanglement_entropy(s, c) - c * std::log(double(G.order()))));
            worst = std::max(worst, dev);
            rows.push_back({{"group", G.str()}, {"n", n}, {"midpoint_entropy", entanglement_entropy(s, n)}});
        }
    }
    CheckResult r{"zero_dimensional_gauging", worst < o.tolerance, Json::object(),
                  "N iterations give N nested Bell pairs, midpoint entropy N log|G|"};
    r.measured = {{"instances", rows}, {"max_deviation", worst}};
    return r;
}

}  // namespace

// ------------------------------------------------------------ commands

Json config_json(const ResolvedConfig& c) {
    Json j;
    j["group"] = c.group.orders();
    j["n"] = c.raw.n;
    j["m"] = c.raw.m;
    j["bc"] = c.raw.bc;
    j["twist_even"] = c.alpha.upper();
    j["twist_odd"] = c.gamma.upper();
    j["twist_beta"] = c.beta.upper();
    Json h = Json::array();
    for (const auto& e : c.subgroup) h.push_back(exps_json(e));
    j["subgroup"] = h;
    j["element"] = c.raw.element;
    j["character"] = c.raw.character;
    j["max_dim"] = c.raw.max_dim;
    j["tolerance"] = c.raw.tolerance;
    j["seed"] = c.raw.seed;
    return j;
}

Report run_code(const ResolvedConfig& c) {
    Report rep{"code", config_json(c), {}};
    CodeSpec spec = make_code(c);
    spec.validate();
    auto terms = terms_of(all_plaquettes(spec));
    auto comm = check_all_commute(terms);
    rep.add({"all_commute",
             comm.ok,
             {{"all_commute", comm.ok}, {"terms", terms.size()}, {"pairs_checked", comm.pairs_checked}},
             "every pair of code terms commutes"});
    DimensionOptions o;
    o.dense_cap = c.raw.max_dim;
    auto d = ground_space_dimension(spec, o);
    Json m = {{"ground_dimension", d.dimension}, {"method", dimension_method_name(d.method)}};
    std::optional<uint64_t> want;
    std::string claim = "ground space dimension, no reference value for this configuration";
    const uint64_t g = c.group.order();
    bool torus = c.vertical == Boundary::Periodic && c.horizontal == Boundary::Periodic;
    bool a_triv = is_coboundary(c.alpha), c_triv = is_coboundary(c.gamma);
    if (torus && a_triv && c_triv) {
        want = g * g;
        claim = "untwisted torus: |G|^2 ground states";
    } else if (torus && (a_triv || c_triv)) {
        want = single_twist_dimension(a_triv ? c.gamma : c.alpha, c.raw.m / 2);
        claim = *want == g ? "twisted torus: |G| ground states"
                           : "twisted torus: |G| times the kernel of the slant product of the summed twist";
    }
    m["expected"] = want ? Json(*want) : Json(nullptr);
    rep.add({"ground_dimension", !want || *want == d.dimension, m, claim});
    if (torus) {
        auto ls = logical_operators(spec);
        bool ok = std::all_of(ls.logicals.begin(), ls.logicals.end(), [](const Logical& l) { return l.commutes; });
        Json names = Json::array();
        for (const auto& l : ls.logicals) names.push_back(l.name);
        rep.add({"logical_operators",
                 ok,
                 {{"logicals", names}, {"excluded", ls.excluded.size()}},
                 "the listed logical strings commute with every term"});
    }
    return rep;
}

Report run_compose(const ResolvedConfig& c) {
    Report rep{"compose", config_json(c), {}};
    const GroupSpec& G = c.group;
    auto layers = make_layers(c.raw.n, c.raw.m, c.horizontal, nontrivial(c.alpha), nontrivial(c.gamma));
    auto s = build_fixed_point_state(G, c.subgroup, c.raw.n);
    auto out = compose_gauging(G, layers, s.state, c.raw.max_dim);
    double worst_norm = 0;
    for (double x : out.layer_norms) worst_norm = std::max(worst_norm, std::abs(x - 1.0));
    rep.add({"layer_norms",
             worst_norm < c.raw.tolerance,
             {{"layer_norms", out.layer_norms}, {"max_deviation", worst_norm}},
             "each map keeps a symmetric input at unit norm"});
    auto loc = verify_local_symmetry(out, layers, c.raw.tolerance);
    rep.add({"local_symmetries",
             loc.pass(),
             {{"checked", loc.checked}, {"max_deviation", loc.max_deviation}, {"failures", loc.failures}},
             "the composed state is fixed by the local symmetry left behind by each map"});
    CodeSpec spec = CodeSpec::untwisted(out.lattice);
    spec.alpha = c.alpha;
    spec.gamma = c.gamma;
    auto terms = build_bulk_stabilizers(spec);
    double dev = stabilizer_deviation(terms, out.state);
    rep.add({"bulk_stabilizers",
             dev < c.raw.tolerance,
             {{"terms", terms.size()}, {"max_deviation", dev}},
             "the composed state is a +1 eigenstate of every bulk term"});
    auto got = contract_pepes(assemble_pepes(G, layers), s.state, c.raw.max_dim);
    double fd = 1.0 - fidelity(got, out.state);
    rep.add({"pepes_contraction",
             fd < c.raw.tolerance,
             {{"fidelity_deviation", fd}, {"sites", out.lattice.site_count()}},
             "the tensor network contraction gives the composed state"});
    return rep;
}

Report run_anyons(const ResolvedConfig& c) {
    Report rep{"anyons", config_json(c), {}};
    CodeSpec spec = make_code(c);
    const Lattice2D& lat = spec.lattice;
    if (c.vertical != Boundary::Periodic || c.horizontal != Boundary::Periodic || c.raw.n < 3 || c.raw.m < 4)
        throw ConfigError("anyons: needs --bc torus with --n >= 3 and --m >= 4");
    const GroupSpec& G = c.group;
    GroupElement g = GroupElement::from_index(G, c.raw.element);
    ProductOperator single(lat.site_or_throw(1, 1), spec.alpha.is_trivial() ? shift_x(g) : projective_x(spec.alpha, g));
    auto syn = syndrome(spec, single);
    int want = g.is_identity() ? 0 : 2 + (slant_product(spec.alpha, g).is_trivial() ? 0 : 1);
    rep.add({"single_excitation",
             syn.violated_count() == want,
             {{"g", g.str()}, {"violated", syn.violated_count()}, {"expected", want}, {"terms", labels_json(syn.violated())}},
             "X_g on one edge violates 2 terms, plus one more when its slant product is nontrivial"});
    Json table = Json::array();
    bool ok = true;
    for (int a = 0; a < G.order(); ++a)
        for (int ch = 0; ch < G.order(); ++ch) {
            auto xs = vertical_path(lat, 1, 1, 3, StringFlavor::X, a);
            auto zs = horizontal_path(lat, 1, 1, 2, StringFlavor::Z, ch);
            Phase p = braiding_phase(spec, zs, xs);
            Phase w = pair(DualCharacter::from_index(G, ch), GroupElement::from_index(G, a));
            ok = ok && p == w;
            table.push_back({{"g", a}, {"chi", ch}, {"phase", p.str()}});
        }
    rep.add({"braiding", ok, {{"table", table}}, "one crossing of X_g and Z_chi strings gives chi(g)"});
    return rep;
}

Report run_confine(const ResolvedConfig& c) {
    Report rep{"confine", config_json(c), {}};
    CodeSpec spec = make_code(c);
    if (c.vertical != Boundary::Periodic || c.raw.n < 4 || c.raw.m < 8)
        throw ConfigError("confine: needs --bc torus with --n >= 4 and --m >= 8");
    auto r = confinement_report(spec, GroupElement::from_index(c.group, c.raw.element));
    Json bends = Json::array();
    for (const auto& b : r.bends) bends.push_back({{"shift", b.shift}, {"count", b.count}, {"relocated", b.relocated}});
    rep.add({"single_excitation",
             !r.twisted || r.single_odd(),
             {{"count", r.single_count}, {"twisted", r.twisted}},
             "a twisted single excitation violates an odd number of terms"});
    rep.add({"string_growth",
             r.horizontal_growing(),
             {{"lengths", r.lengths}, {"counts", r.horizontal_counts}, {"slope", r.slope}},
             "horizontal string syndromes grow with length"});
    rep.add({"dipole_mobility",
             r.dipole_constant() && r.bends_relocate() && r.dipole_braids_trivially,
             {{"separations", r.separations},
              {"counts", r.dipole_counts},
              {"bends", bends},
              {"braids_trivially", r.dipole_braids_trivially}},
             "dipoles move vertically at constant cost and braid trivially with Z strings"});
    return rep;
}

Report run_boundary(const ResolvedConfig& c) {
    Report rep{"boundary", config_json(c), {}};
    if (c.vertical != Boundary::Open) throw ConfigError("boundary: needs --bc cylinder or open");
    const GroupSpec& G = c.group;
    auto s = build_fixed_point_state(G, c.subgroup, c.raw.n);
    auto surv = surviving_boundary_terms(s, c.beta, std::min(3, c.raw.n - 1));
    Json names = Json::array();
    for (const auto& chi : surv.surviving) names.push_back(chi.str());
    bool beta_trivial = is_coboundary(c.beta);
    bool ok = !beta_trivial || surv.surviving == restriction_kernel(G, c.subgroup);
    rep.add({"surviving_terms",
             ok,
             {{"surviving", names}, {"asserted", beta_trivial}},
             "surviving boundary terms are the characters trivial on H"});
    CodeSpec spec = make_code(c);
    auto cond = condensation_table(spec, s);
    Json anyons = Json::array();
    for (const auto& a : cond.anyons)
        anyons.push_back({{"type", a.type},
                          {"label", a.label_str},
                          {"condenses", a.condenses},
                          {"expected", a.expected ? Json(*a.expected) : Json(nullptr)},
                          {"violated", labels_json(a.violated)}});
    rep.add({"condensation", cond.pass(), {{"anyons", anyons}}, "anyons from H condense on the boundary, others do not"});
    return rep;
}

Report run_tn(const ResolvedConfig& c, bool pull_through, const std::optional<std::string>& dump) {
    Report rep{"tn", config_json(c), {}};
    rep.config["tensor"] = c.raw.tensor;
    const GroupSpec& G = c.group;
    if (pull_through) {
        auto r = pull_through_check(c.raw.tensor, G);
        Json fails = Json::array(), alt = Json::array();
        for (const auto& x : r.checks) {
            if (x.exact) continue;
            Json e = {{"tensor", x.tensor}, {"relation", x.relation}, {"label", x.label}, {"max_deviation", x.max_deviation}};
            (x.alternate_order ? alt : fails).push_back(e);
        }
        rep.add({"pull_through",
                 r.pass() && r.max_deviation() == 0.0,
                 {{"checks", r.checks.size()},
                  {"failures", fails},
                  {"max_entry_deviation", r.max_deviation()},
                  {"alternate_order_failures", alt}},
                 "every tensor symmetry relation holds as an exact tensor equation"});
    }
    Json layers = Json::array();
    bool ok = true;
    for (int j = 0; j < 2; ++j) {
        LayerSpec l{j, c.raw.n, c.horizontal, nontrivial(j == 0 ? c.alpha : c.gamma)};
        auto mpo = contract_mpo_layer(G, l, c.raw.max_dim);
        auto ref = GaugingMap(G, l, c.raw.max_dim).exact_matrix();
        double k = mpo_normalization(G, l);
        bool eq = equal_entries(mpo, ref) && k > 0 && std::abs(mpo.scale * k - ref.scale) <= 1e-12 * ref.scale;
        ok = ok && eq;
        layers.push_back({{"layer", j}, {"equal", eq}, {"normalization", k}});
    }
    rep.add({"mpo_layers", ok, {{"layers", layers}}, "contracted MPO layers equal the gauging maps up to a positive constant"});
    if (dump) rep.add({"tensor_dump", true, {{"tensor", Json::parse(tensor_json(build_tensor(parse_tensor_name(*dump), G)))}},
                       "exact tensor entries"});
    return rep;
}

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> all{
        {1, "stabilizer_commutation", c01},       {2, "ground_degeneracy_untwisted", c02},
        {3, "ground_degeneracy_twisted", c03},    {4, "gauged_state_frustration_free", c04},
        {5, "emergent_dual_symmetry", c05},       {6, "string_order_mapping", c06},
        {7, "twisted_plaquette_product", c07},    {8, "confinement", c08},
        {9, "braiding", c09},                     {10, "boundary_condensation", c10},
        {11, "tensor_network_equivalence", c11},  {12, "rep_fusion", c12},
        {13, "zero_dimensional_gauging", c13},
    };
    return all;
}

Report run_suite(const SuiteOptions& opts, const std::function<void(const CheckResult&, double)>& on_result) {
    Report rep{"suite", Json::object(), {}};
    rep.config = {{"max_dim", opts.max_dim}, {"tolerance", opts.tolerance}, {"seed", opts.seed}};
    auto t0 = Clock::now();
    for (const auto& c : acceptance_criteria()) {
        auto t = Clock::now();
        CheckResult r;
        try {
            r = c.run(opts);
        } catch (const std::exception& e) {
            r = {c.name, false, {{"error", e.what()}}, "completed without error"};
        }
        char buf[8];
        std::snprintf(buf, sizeof buf, "c%02d_", c.id);
        r.name = buf + r.name;
        if (on_result) on_result(r, seconds_since(t));
        rep.add(std::move(r));
    }
    double total = seconds_since(t0);
    CheckResult last{"c14_suite_runtime", total < kSuiteTimeLimitSeconds,
                     {{"limit_seconds", kSuiteTimeLimitSeconds}, {"within_limit", total < kSuiteTimeLimitSeconds}},
                     "the full battery finishes within the time limit"};
    if (on_result) on_result(last, total);
    rep.add(std::move(last));
    return rep;
}

}  // namespace gauge

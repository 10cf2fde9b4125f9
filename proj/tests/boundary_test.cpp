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


#include "gauge/boundary.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gauge/errors.hpp"
#include "gauge/gauging.hpp"
#include "test_util.hpp"

using namespace gauge;
using namespace gauge::testing;

namespace {

std::vector<GroupElement> subgroup(const GroupSpec& g, const std::vector<int>& idx) {
    std::vector<GroupElement> out;
    for (int i : idx) out.push_back(GroupElement::from_index(g, i));
    return out;
}

std::set<int> indices(const std::vector<DualCharacter>& v) {
    std::set<int> s;
    for (const auto& c : v) s.insert(c.index());
    return s;
}

const std::vector<std::vector<int>> kSmallGroups = {{2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {7}, {8}, {2, 4}, {2, 2, 2}};

}  // namespace

TEST(Boundary, FixedPointStatesZ2) {
    GroupSpec Z2({2});
    auto ghz = build_fixed_point_state(Z2, subgroup(Z2, {0}), 3);
    for (size_t i = 0; i < 8; ++i)
        EXPECT_NEAR(std::abs(ghz.group_state[i] - ((i == 0 || i == 7) ? 1 / std::sqrt(2.0) : 0.0)), 0, 1e-12);
    auto plus = build_fixed_point_state(Z2, subgroup(Z2, {0, 1}), 3);
    for (size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(plus.group_state[i] - 1 / std::sqrt(8.0)), 0, 1e-12);
    // The Fourier image of |+++> is |000>.
    EXPECT_NEAR(std::abs(plus.state[0] - 1.0), 0, 1e-12);
    EXPECT_THROW(build_fixed_point_state(GroupSpec({4}), subgroup(GroupSpec({4}), {0, 1}), 3), SpecError);
}

TEST(Boundary, FixedPointStatesNormalizedAndSymmetric) {
    for (const auto& o : kSmallGroups) {
        GroupSpec G(o);
        if (G.order() > 6) continue;
        for (const auto& h : enumerate_subgroups(G)) {
            auto s = build_fixed_point_state(G, h, 3);
            EXPECT_NEAR(s.group_state.norm(), 1.0, 1e-12);
            EXPECT_NEAR(s.state.norm(), 1.0, 1e-12);
            for (const auto& g : elements(G)) {
                ProductOperator x, z;
                for (int i = 0; i < 3; ++i) {
                    x.times(i, shift_x(g));
                    z.times(i, clock_z_dual(g));
                }
                EXPECT_NEAR(std::abs(expectation(x, s.group_state) - 1.0), 0, 1e-12);
                EXPECT_NEAR(std::abs(expectation(z, s.state) - 1.0), 0, 1e-12);
            }
            EXPECT_NO_THROW(wrap_dual_state(G, s.state));
        }
    }
}

TEST(Boundary, FourierConjugation) {
    // F X_g F^dag = Z_g, checked on a random single-site state.
    GroupSpec G({2, 3});
    std::mt19937_64 rng(1);
    StateVector psi({SiteKind::EdgeGroup}, {6});
    psi.amps() = random_vector(6, rng);
    for (const auto& g : elements(G)) {
        StateVector a = fourier_to_dual(G, apply(ProductOperator(0, shift_x(g)), psi));
        StateVector b = apply(ProductOperator(0, clock_z_dual(g)), fourier_to_dual(G, psi));
        for (int i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0, 1e-12);
    }
}

TEST(Boundary, StringOrderFixedPointValues) {
    GroupSpec Z2({2});
    Cocycle triv = Cocycle::trivial(Z2);
    DualCharacter chi = DualCharacter::from_index(Z2, 1), e = DualCharacter::trivial(Z2);
    auto ghz = build_fixed_point_state(Z2, subgroup(Z2, {0}), 4);
    auto plus = build_fixed_point_state(Z2, subgroup(Z2, {0, 1}), 4);
    EXPECT_NEAR(std::abs(string_order_expectation(ghz, chi, triv, 0, 1) - 1.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(string_order_expectation(plus, chi, triv, 0, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(string_order_expectation(plus, e, triv, 1, 2) - 1.0), 0, 1e-12);

    for (const auto& o : kSmallGroups) {
        GroupSpec G(o);
        if (G.order() > 6) continue;
        Cocycle t = Cocycle::trivial(G);
        for (const auto& h : enumerate_subgroups(G)) {
            auto s = build_fixed_point_state(G, h, 4);
            for (const auto& c : characters(G)) {
                bool trivial_on_h = true;
                for (const auto& x : h) trivial_on_h = trivial_on_h && pair(c, x).is_one();
                for (int l = 1; l <= 3; ++l)
                    for (int i = 0; i < 4; ++i) {
                        auto v = string_order_expectation(s, c, t, i, l);
                        EXPECT_NEAR(std::abs(v - (trivial_on_h ? 1.0 : 0.0)), 0, 1e-12);
                        auto w = string_order_expectation(s, c, t, i, l, OrderConvention::Group);
                        EXPECT_NEAR(std::abs(v - w), 0, 1e-12);
                    }
            }
        }
    }
}

TEST(Boundary, StringOrderConcatenates) {
    GroupSpec G({2, 2});
    for (const auto& beta : enumerate_cocycle_classes(G))
        for (const auto& c : characters(G)) {
            ProductOperator a = string_order_operator(G, 5, c, beta, 0, 1);
            ProductOperator b = string_order_operator(G, 5, c, beta, 1, 1);
            ProductOperator two = string_order_operator(G, 5, c, beta, 0, 2);
            EXPECT_TRUE(a * b == two) << c.str() << " " << beta.str();
            ProductOperator three = string_order_operator(G, 5, c, beta, 0, 3);
            EXPECT_TRUE(two * string_order_operator(G, 5, c, beta, 2, 1) == three);
        }
    EXPECT_THROW(string_order_operator(G, 3, DualCharacter::trivial(G), Cocycle::trivial(G), 0, 3), SpecError);
}

TEST(Boundary, SurvivingTerms) {
    GroupSpec Z2({2});
    Cocycle t2 = Cocycle::trivial(Z2);
    EXPECT_EQ(indices(surviving_boundary_terms(build_fixed_point_state(Z2, subgroup(Z2, {0}), 4), t2).surviving),
              (std::set<int>{0, 1}));
    EXPECT_EQ(indices(surviving_boundary_terms(build_fixed_point_state(Z2, subgroup(Z2, {0, 1}), 4), t2).surviving),
              (std::set<int>{0}));
    GroupSpec K({2, 2});
    auto diag = surviving_boundary_terms(build_fixed_point_state(K, subgroup(K, {0, 3}), 4), Cocycle::trivial(K));
    EXPECT_EQ(diag.surviving.size(), 2u);
    for (const auto& c : diag.surviving) EXPECT_TRUE(pair(c, GroupElement::from_index(K, 3)).is_one());
    EXPECT_EQ(diag.ells, (std::vector<int>{1, 2, 3}));

    for (const auto& o : kSmallGroups) {
        GroupSpec G(o);
        for (const auto& h : enumerate_subgroups(G)) {
            auto rep = surviving_boundary_terms(build_fixed_point_state(G, h, 3), Cocycle::trivial(G));
            EXPECT_TRUE(rep.closed);
            EXPECT_EQ(indices(rep.surviving), indices(restriction_kernel(G, h)));
        }
    }
}

TEST(Boundary, NonFixedPointReportsRawValues) {
    GroupSpec Z2({2});
    std::mt19937_64 rng(8);
    StateVector psi(std::vector<SiteKind>(4, SiteKind::VertexDual), std::vector<int>(4, 2));
    psi.amps() = random_vector(16, rng);
    for (size_t i = 0; i < psi.size(); ++i) {
        auto d = psi.digits(i);
        if ((d[0] + d[1] + d[2] + d[3]) % 2) psi[i] = 0;
    }
    auto s = wrap_dual_state(Z2, psi);
    auto rep = surviving_boundary_terms(s, Cocycle::trivial(Z2));
    EXPECT_EQ(indices(rep.surviving), (std::set<int>{0}));
    double v = std::abs(rep.raw[1][0]);
    EXPECT_GT(v, 1e-6);
    EXPECT_LT(v, 1.0 - 1e-6);
    StateVector odd = StateVector::basis(std::vector<SiteKind>(2, SiteKind::VertexDual), {2, 2}, {1, 0});
    EXPECT_THROW(wrap_dual_state(Z2, odd), SpecError);
}

TEST(Boundary, GaugedBoundaryTermsMatchStringOrder) {
    // The bottom boundary term at a row-1 edge acts on the gauged state like
    // the l = 1 string order on the input.
    struct Case {
        std::vector<int> orders;
        std::vector<int> upper;
    };
    for (const auto& c : std::vector<Case>{{{2}, {}}, {{3}, {}}, {{2, 2}, {0}}, {{2, 2}, {1}}}) {
        GroupSpec G(c.orders);
        Cocycle beta(G, c.upper);
        for (const auto& h : enumerate_subgroups(G)) {
            auto s = build_fixed_point_state(G, h, 3);
            auto out = compose_gauging(G, make_layers(3, 2, Boundary::Periodic), s.state);
            CodeSpec spec = CodeSpec::untwisted(out.lattice);
            spec.beta = beta;
            auto all = boundary_plaquettes(spec, TermRole::Bottom, characters(G));
            auto sv = surviving_boundary_terms(s, beta);
            std::set<int> surv = indices(sv.surviving);
            for (const auto& p : all)
                for (size_t k = 0; k < p.ops.size(); ++k) {
                    DualCharacter chi = DualCharacter::from_index(G, p.elements[k]);
                    int x = p.label.x;
                    auto want = string_order_expectation(s, chi, beta, (x - 1) / 2, 1);
                    auto got = expectation(p.ops[k], out.state);
                    EXPECT_NEAR(std::abs(got - want), 0, 1e-10) << p.label.str() << " " << chi.str();
                    if (surv.count(chi.index())) {
                        EXPECT_NEAR(std::abs(got - 1.0), 0, 1e-10);
                    }
                }
        }
    }
}

TEST(Boundary, CondensationZ2) {
    GroupSpec Z2({2});
    CodeSpec spec = CodeSpec::untwisted(Lattice2D(Z2, 3, 3, Boundary::Open, Boundary::Periodic));
    auto all = condensation_table(spec, build_fixed_point_state(Z2, subgroup(Z2, {0, 1}), 4));
    EXPECT_TRUE(all.pass());
    for (const auto& a : all.anyons) EXPECT_TRUE(a.condenses) << a.type << a.label;
    auto ghz = condensation_table(spec, build_fixed_point_state(Z2, subgroup(Z2, {0}), 4));
    EXPECT_TRUE(ghz.pass());
    for (const auto& a : ghz.anyons) {
        bool blocked = a.type == "g" && a.label == 1;
        EXPECT_EQ(a.condenses, !blocked) << a.type << a.label;
        if (blocked) {
            EXPECT_FALSE(a.violated.empty());
            EXPECT_EQ(a.violated[0].role, TermRole::Bottom);
        }
    }
}

TEST(Boundary, CondensationPartitionMatchesSubgroup) {
    for (const auto& o : kSmallGroups) {
        GroupSpec G(o);
        CodeSpec spec = CodeSpec::untwisted(Lattice2D(G, 2, 3, Boundary::Open, Boundary::Periodic));
        for (const auto& h : enumerate_subgroups(G)) {
            auto rep = condensation_table(spec, build_fixed_point_state(G, h, 3));
            EXPECT_TRUE(rep.pass());
            std::set<int> blocked, want;
            for (const auto& a : rep.anyons)
                if (!a.condenses) {
                    EXPECT_EQ(a.type, "g");
                    blocked.insert(a.label);
                }
            std::set<int> hs;
            for (const auto& e : h) hs.insert(e.index());
            for (int g = 0; g < G.order(); ++g)
                if (!hs.count(g)) want.insert(g);
            EXPECT_EQ(blocked, want);
        }
    }
}

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


#include "gauge/finite_group.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gauge/errors.hpp"
#include "test_util.hpp"

using namespace gauge;
using namespace gauge::testing;

namespace {

// S3 as supplied data: e, (01), (02), (12), (012), (021).
const std::vector<std::vector<int>> kS3 = {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
                                           {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};

// Floating-point orthogonality oracle.
std::vector<int64_t> oracle_fusion(const std::vector<ClassFunction>& t, int s, int r, int order) {
    std::vector<int64_t> out;
    for (const auto& g : t) {
        cplx acc = 0.0;
        for (int a = 0; a < order; ++a)
            acc += t[s].values[a].to_complex() * t[r].values[a].to_complex() * std::conj(g.values[a].to_complex());
        acc /= static_cast<double>(order);
        EXPECT_NEAR(acc.imag(), 0.0, 1e-12);
        EXPECT_NEAR(acc.real(), std::round(acc.real()), 1e-12);
        out.push_back(static_cast<int64_t>(std::llround(acc.real())));
    }
    return out;
}

}  // namespace

TEST(FiniteGroup, S3Table) {
    auto g = FiniteGroup::from_table("S3", kS3);
    auto b = FiniteGroup::s3();
    for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) EXPECT_EQ(g.mul(a, c), b.mul(a, c));
    EXPECT_FALSE(g.abelian());
    EXPECT_EQ(g.conjugacy_classes(), (std::vector<int>{0, 1, 1, 1, 2, 2}));
    EXPECT_EQ(g.inv(4), 5);
    for (const auto& c : s3_characters()) EXPECT_NO_THROW(check_class_function(g, c));
}

TEST(FiniteGroup, TableErrors) {
    EXPECT_THROW(FiniteGroup::from_table("x", {{0, 1}, {1, 1}}), SpecError);
    EXPECT_THROW(FiniteGroup::from_table("x", {{1, 0}, {0, 0}}), SpecError);
    EXPECT_THROW(FiniteGroup::from_table("x", {{0, 1}, {1}}), SpecError);
    EXPECT_THROW(FiniteGroup::from_table("x", {{0, 2}, {1, 0}}), SpecError);
    // Latin square with identity that is not associative.
    EXPECT_THROW(FiniteGroup::from_table("x", {{0, 1, 2, 3, 4},
                                               {1, 0, 3, 4, 2},
                                               {2, 4, 0, 1, 3},
                                               {3, 2, 4, 0, 1},
                                               {4, 3, 1, 2, 0}}),
                 SpecError);
}

TEST(IrrepFlux, S3StandardSquared) {
    auto g = FiniteGroup::from_table("S3", kS3);
    auto t = s3_characters();
    for (int n : {2, 3}) {
        auto triv = irrep_flux_operator(g, t[0], n);
        auto sign = irrep_flux_operator(g, t[1], n);
        auto st = irrep_flux_operator(g, t[2], n);
        EXPECT_TRUE(st * st == triv + sign + st) << n;
        EXPECT_EQ(fusion_coefficients(g, t, 2, 2), (std::vector<int64_t>{1, 1, 1}));
        EXPECT_TRUE(sign * sign == triv);
        EXPECT_TRUE(sign * st == st);
    }
}

TEST(IrrepFlux, FusionAllPairs) {
    auto s3 = FiniteGroup::from_table("S3", kS3);
    GroupSpec v({2, 2});
    auto z22 = FiniteGroup::from_abelian(v);
    struct Case {
        const FiniteGroup* g;
        std::vector<ClassFunction> t;
    };
    for (const auto& c : {Case{&s3, s3_characters()}, Case{&z22, abelian_characters(v)}})
        for (int n : {2, 3}) {
            auto checks = verify_fusion(*c.g, c.t, n);
            EXPECT_EQ(checks.size(), c.t.size() * c.t.size());
            for (const auto& f : checks) {
                EXPECT_TRUE(f.holds) << c.g->name() << " " << f.sigma << "x" << f.rho << " n=" << n;
                EXPECT_EQ(f.coefficients, oracle_fusion(c.t, f.sigma, f.rho, c.g->order()));
            }
        }
}

TEST(IrrepFlux, AbelianFactorizes) {
    for (const auto& G : {GroupSpec({2, 2}), GroupSpec({3}), GroupSpec({2, 3})}) {
        auto g = FiniteGroup::from_abelian(G);
        auto t = abelian_characters(G);
        for (const auto& chi : characters(G)) {
            ProductOperator z;
            for (int s = 0; s < 2; ++s) z.times(s, clock_z(chi));
            EXPECT_TRUE(irrep_flux_operator(g, t[chi.index()], 2).equals(z)) << chi.str();
            // A different character does not match.
            auto other = DualCharacter::from_index(G, (chi.index() + 1) % G.order());
            ProductOperator w;
            for (int s = 0; s < 2; ++s) w.times(s, clock_z(other));
            EXPECT_FALSE(irrep_flux_operator(g, t[chi.index()], 2).equals(w));
        }
    }
}

TEST(IrrepFlux, TrivialIsIdentity) {
    auto g = FiniteGroup::s3();
    auto op = irrep_flux_operator(g, s3_characters()[0], 3);
    EXPECT_EQ(op.diag.size(), 216u);
    for (const auto& v : op.diag) EXPECT_EQ(v.as_integer(), Int128(1));
    EXPECT_TRUE(op.equals(ProductOperator()));
}

TEST(IrrepFlux, NotAClassFunction) {
    auto g = FiniteGroup::s3();
    ClassFunction bad{"bad", 1, {}};
    for (int a = 0; a < 6; ++a) bad.values.push_back(Cyclotomic::integer(1, a == 1 ? 3 : 1));
    EXPECT_THROW(irrep_flux_operator(g, bad, 2), SpecError);
    ClassFunction short_{"short", 1, {Cyclotomic::integer(1, 1)}};
    EXPECT_THROW(irrep_flux_operator(g, short_, 2), SpecError);
}

TEST(IrrepFlux, ZeroFluxGivesDimension) {
    auto g = FiniteGroup::s3();
    auto t = s3_characters();
    const int n = 3;
    for (const auto& chi : t) {
        auto op = irrep_flux_operator(g, chi, n);
        auto dim = chi.values[g.identity()];
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c) {
                    auto f = zero_flux_configuration(g, {a, b, c});
                    EXPECT_EQ(op.diag[(f[0] * 6 + f[1]) * 6 + f[2]], dim);
                }
    }
}

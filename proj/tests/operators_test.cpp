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

#include "gauge/operators.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gauge/errors.hpp"
#include "gauge/kernels.hpp"
#include "test_util.hpp"

using namespace gauge;
using namespace gauge::testing;

namespace {
const std::vector<std::vector<int>> kGroups = {{2}, {3}, {4}, {2, 2}, {2, 3}, {4, 2}, {2, 2, 2}, {6}, {3, 3}};
}

TEST(operators, z2_shift_is_bit_flip) {
    GroupSpec G({2});
    auto x = shift_x(GroupElement(G, {1}));
    EXPECT_EQ(x.perm(), (std::vector<int>{1, 0}));
    EXPECT_EQ(x.phases(), (std::vector<int>{0, 0}));
    EXPECT_TRUE(clock_z(DualCharacter::trivial(G)).is_identity());
    EXPECT_TRUE(shift_x(GroupElement::identity(G)).is_identity());
}

TEST(operators, z2_commutation_from_explicit_matrices) {
    GroupSpec G({2});
    auto x = shift_x(GroupElement(G, {1}));
    auto z = clock_z(DualCharacter(G, {1}));
    Dense X = {{0, 1}, {1, 0}}, Z = {{1, 0}, {0, -1}};
    EXPECT_NEAR(max_diff(from_monomial(x), X), 0, 1e-15);
    EXPECT_NEAR(max_diff(from_monomial(z), Z), 0, 1e-15);
    auto c = commutation_phase(x, z);
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, Phase(1, 2));
    Dense xz = matmul(X, Z), zx = matmul(Z, X);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(xz[i][j] + zx[i][j]), 0, 1e-15);
}

TEST(operators, z3_clock_shift_order) {
    GroupSpec G({3});
    auto x = shift_x(GroupElement(G, {1}));
    auto z = clock_z(DualCharacter(G, {1}));
    // X Z = e^{-2 pi i/3} Z X, checked with explicit matrices.
    auto lhs = matmul(from_monomial(x), from_monomial(z));
    auto rhs = matmul(from_monomial(z), from_monomial(x));
    for (auto& row : rhs)
        for (auto& v : row) v *= root(-1, 3);
    EXPECT_NEAR(max_diff(lhs, rhs), 0, 1e-12);
    auto c = (x * z * (z * x).adjoint()).scalar();
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, Phase(-1, 3));
}

TEST(operators, unitarity_and_regular_representation) {
    for (const auto& o : kGroups) {
        GroupSpec G(o);
        for (const auto& g : elements(G)) {
            auto x = shift_x(g);
            EXPECT_TRUE((x * x.adjoint()).is_identity());
            for (const auto& h : elements(G)) EXPECT_EQ(shift_x(g) * shift_x(h), shift_x(compose(g, h)));
        }
        for (const auto& c : characters(G)) {
            EXPECT_TRUE((clock_z(c) * clock_z(c).adjoint()).is_identity());
            EXPECT_TRUE((shift_x_dual(c) * shift_x_dual(c).adjoint()).is_identity());
        }
    }
}

TEST(operators, clock_shift_relations) {
    for (const auto& o : kGroups) {
        GroupSpec G(o);
        for (const auto& g : elements(G))
            for (const auto& c : characters(G)) {
                // Z_c X_g = c(g) X_g Z_c on C[G]; on C[G^]: Z_g X_c = c(g) X_c Z_g.
                auto p = pair(c, g);
                auto lhs = clock_z(c) * shift_x(g);
                auto rhs = shift_x(g) * clock_z(c);
                EXPECT_EQ((lhs * rhs.adjoint()).scalar(), p.with_modulus(G.phase_modulus()));
                auto lhs2 = clock_z_dual(g) * shift_x_dual(c);
                auto rhs2 = shift_x_dual(c) * clock_z_dual(g);
                EXPECT_EQ((lhs2 * rhs2.adjoint()).scalar(), p.with_modulus(G.phase_modulus()));
            }
    }
}

TEST(operators, projective_representations) {
    for (const auto& o : std::vector<std::vector<int>>{{2, 2}, {4}, {2, 3}, {4, 2}, {2, 2, 2}}) {
        GroupSpec G(o);
        for (const auto& a : enumerate_cocycle_classes(G)) {
            for (const auto& g : elements(G)) {
                if (a.is_trivial()) {
                    EXPECT_EQ(projective_x(a, g), shift_x(g));
                    EXPECT_EQ(projective_x_tilde(a, g), shift_x(g).adjoint());
                }
                // X^a_g X~_g = Z_{slant}.
                EXPECT_EQ(projective_x(a, g) * projective_x_tilde(a, g), clock_z(slant_product(a, g)));
                for (const auto& h : elements(G)) {
                    auto lhs = projective_x(a, g) * projective_x(a, h);
                    auto rhs = projective_x(a, compose(g, h));
                    EXPECT_EQ((lhs * rhs.adjoint()).scalar(), a(g, h).with_modulus(G.phase_modulus()));
                    // The right representation is projective with some scalar factor.
                    auto t = projective_x_tilde(a, g) * projective_x_tilde(a, h) *
                             projective_x_tilde(a, compose(g, h)).adjoint();
                    EXPECT_TRUE(t.scalar().has_value());
                    auto c = commutation_phase(projective_x(a, g), projective_x_tilde(a, h));
                    ASSERT_TRUE(c);
                    EXPECT_TRUE(c->is_one());
                }
                for (const auto& c : characters(G)) {
                    auto lhs = clock_z(c) * projective_x(a, g);
                    auto rhs = projective_x(a, g) * clock_z(c);
                    EXPECT_EQ((lhs * rhs.adjoint()).scalar(), pair(c, g).with_modulus(G.phase_modulus()));
                }
            }
        }
    }
}

TEST(operators, z2xz2_twisted_product_is_diagonal_clock) {
    GroupSpec G({2, 2});
    Cocycle a(G, {1});
    GroupElement g(G, {1, 0});
    auto prod = projective_x(a, g) * projective_x_tilde(a, g);
    // Explicit 4x4: X^a_g|h> = a(g,h)|gh>, a(g,h) = (-1)^{g_2 h_1}.
    Dense X(4, std::vector<cplx>(4, 0.0)), Xt(4, std::vector<cplx>(4, 0.0));
    for (int h = 0; h < 4; ++h) {
        int h1 = h / 2, h2 = h % 2, g1 = 1, g2 = 0;
        int gh = ((g1 + h1) % 2) * 2 + (g2 + h2) % 2;
        X[gh][h] = (g2 * h1) % 2 ? -1.0 : 1.0;
        // X~|h> = conj a(h g^-1, g) |h g^-1>
        int k1 = (h1 + g1) % 2, k2 = (h2 + g2) % 2;
        Xt[k1 * 2 + k2][h] = (k2 * g1) % 2 ? -1.0 : 1.0;
    }
    auto dense = matmul(X, Xt);
    EXPECT_NEAR(max_diff(dense, from_monomial(prod)), 0, 1e-15);
    // Z_{(0,1)}: diag(1,-1,1,-1).
    EXPECT_EQ(prod, clock_z(DualCharacter(G, {0, 1})));
}

TEST(operators, product_operator_algebra) {
    GroupSpec G({3});
    GroupElement g(G, {1});
    DualCharacter c(G, {1});
    ProductOperator a(0, shift_x(g));
    ProductOperator b(0, clock_z(c));
    ProductOperator d(1, clock_z(c));
    EXPECT_EQ(commutation_phase(a, b), Phase(2, 3));
    EXPECT_TRUE(commutation_phase(a, d)->is_one());
    EXPECT_TRUE((a * a.adjoint()).is_identity());
    auto ab = a * b;
    EXPECT_EQ(ab.factors().at(0), shift_x(g) * clock_z(c));
}

TEST(operators, apply_matches_dense_oracle) {
    std::mt19937_64 rng(3);
    for (const auto& o : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
        GroupSpec G(o);
        int d = G.order();
        std::vector<SiteKind> kinds = {SiteKind::EdgeGroup, SiteKind::VertexDual, SiteKind::EdgeGroup};
        StateVector psi(kinds, {d, d, d});
        psi.amps() = random_vector(psi.size(), rng);
        Cocycle a = enumerate_cocycle_classes(G).back();
        for (int trial = 0; trial < 10; ++trial) {
            int gi = static_cast<int>(rng() % d), ci = static_cast<int>(rng() % d);
            GroupElement g = GroupElement::from_index(G, gi);
            DualCharacter c = DualCharacter::from_index(G, ci);
            ProductOperator op;
            op.times(0, projective_x(a, g));
            op.times(0, clock_z(c));
            op.times(1, shift_x_dual(c) * clock_z_dual(g));
            op.times(2, projective_x_tilde(a, g));
            auto out = apply(op, psi);
            auto ref = matvec(full_matrix(op, 3, d), psi.amps());
            for (size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(std::abs(out[i] - ref[i]), 0, 1e-12);
            EXPECT_NEAR(out.norm(), 1.0, 1e-12);
            // Sequential application equals the product.
            ProductOperator op2(1, clock_z_dual(g));
            auto seq = apply(op2, apply(op, psi));
            auto prod = apply(op2 * op, psi);
            for (size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(std::abs(seq[i] - prod[i]), 0, 1e-12);
            // Serial and parallel kernels agree.
            auto compiled = kernels::compile(op, psi);
            std::vector<cplx> s1, s2;
            kernels::serial::apply(compiled, psi.amps(), s1);
            kernels::parallel::apply(compiled, psi.amps(), s2);
            EXPECT_EQ(s1, s2);
            EXPECT_NEAR(std::abs(kernels::serial::expectation(compiled, psi.amps()) -
                                 kernels::parallel::expectation(compiled, psi.amps())),
                        0, 1e-12);
        }
        ProductOperator id;
        auto same = apply(id, psi);
        EXPECT_EQ(same.amps(), psi.amps());
    }
}

TEST(operators, apply_checks_site_kinds) {
    GroupSpec G({2});
    StateVector psi({SiteKind::VertexDual}, {2});
    psi[0] = 1;
    EXPECT_THROW(apply(ProductOperator(0, shift_x(GroupElement(G, {1}))), psi), SpecError);
    EXPECT_THROW(apply(ProductOperator(1, shift_x_dual(DualCharacter(G, {1}))), psi), SpecError);
    auto out = apply(ProductOperator(0, shift_x_dual(DualCharacter(G, {1}))), psi);
    EXPECT_EQ(out[1], cplx(1.0));
}

TEST(operators, shift_on_reference_state) {
    GroupSpec G({2, 3});
    GroupElement g(G, {1, 2});
    auto psi = StateVector::basis({SiteKind::EdgeGroup, SiteKind::EdgeGroup}, {6, 6}, {0, 0});
    auto out = apply(ProductOperator(1, shift_x(g)), psi);
    EXPECT_EQ(out[g.index()], cplx(1.0));
}

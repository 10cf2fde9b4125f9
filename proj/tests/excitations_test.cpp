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


#include "gauge/excitations.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gauge/errors.hpp"
#include "gauge/gauging.hpp"
#include "test_util.hpp"

using namespace gauge;
using namespace gauge::testing;

namespace {

CodeSpec torus(std::vector<int> orders, int n, int m) {
    return CodeSpec::untwisted(Lattice2D(GroupSpec(orders), n, m, Boundary::Periodic, Boundary::Periodic));
}

CodeSpec twisted_z2z2(int n, int m) {
    CodeSpec s = torus({2, 2}, n, m);
    s.alpha = Cocycle(GroupSpec({2, 2}), {1});
    return s;
}

// Dense oracle: c with S O = c O S, read off the full matrices.
std::optional<cplx> dense_phase(const ProductOperator& s, const ProductOperator& o, int sites, int d) {
    Dense S = full_matrix(s, sites, d), O = full_matrix(o, sites, d);
    Dense so = matmul(S, O), os = matmul(O, S);
    std::optional<cplx> c;
    for (size_t i = 0; i < so.size(); ++i)
        for (size_t j = 0; j < so.size(); ++j) {
            if (std::abs(os[i][j]) < 1e-12) {
                if (std::abs(so[i][j]) > 1e-12) return std::nullopt;
                continue;
            }
            cplx r = so[i][j] / os[i][j];
            if (!c) c = r;
            if (std::abs(r - *c) > 1e-12) return std::nullopt;
        }
    return c;
}

ProductOperator random_local(const CodeSpec& spec, std::mt19937_64& rng, int factors) {
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    std::uniform_int_distribution<int> site(0, lat.site_count() - 1), el(0, G.order() - 1), kind(0, 2);
    ProductOperator op;
    for (int f = 0; f < factors; ++f) {
        int s = site(rng);
        bool edge = lat.sites()[s].kind == SiteKind::EdgeGroup;
        int a = el(rng);
        switch (kind(rng)) {
            case 0:
                op.times(s, edge ? projective_x(spec.alpha, GroupElement::from_index(G, a))
                                 : shift_x_dual(DualCharacter::from_index(G, a)));
                break;
            case 1:
                op.times(s, edge ? clock_z(DualCharacter::from_index(G, a)) : clock_z_dual(GroupElement::from_index(G, a)));
                break;
            default:
                op.times(s, edge ? projective_x_tilde(spec.alpha, GroupElement::from_index(G, a))
                                 : shift_x_dual(DualCharacter::from_index(G, a)).adjoint());
        }
    }
    return op;
}

}  // namespace

TEST(Excitations, IdentityHasTrivialSyndrome) {
    for (const CodeSpec& spec : {torus({2}, 2, 4), twisted_z2z2(2, 2)}) {
        SyndromeMap m = syndrome(spec, ProductOperator());
        EXPECT_TRUE(m.trivial());
        EXPECT_TRUE(m.all_scalar());
        EXPECT_EQ(m.entries.size(), all_plaquettes(spec).size());
    }
}

TEST(Excitations, SingleShiftMatchesDenseScan) {
    CodeSpec spec = torus({2}, 2, 4);
    const Lattice2D& lat = spec.lattice;
    ProductOperator x(lat.site_or_throw(1, 1), shift_x(GroupElement::from_index(lat.group(), 1)));
    SyndromeMap m = syndrome(spec, x);
    EXPECT_EQ(m.violated_count(), 2);
    for (const auto& e : m.entries) {
        if (e.violated) {
            EXPECT_EQ(e.label.type, PlaquetteType::Dual);
        }
    }
    auto ps = all_plaquettes(spec);
    for (size_t p = 0; p < ps.size(); ++p)
        for (size_t k = 0; k < ps[p].ops.size(); ++k) {
            auto c = dense_phase(ps[p].ops[k], x, lat.site_count(), 2);
            ASSERT_TRUE(c.has_value());
            ASSERT_TRUE(m.entries[p].phases[k].has_value());
            EXPECT_LT(std::abs(*c - m.entries[p].phases[k]->value()), 1e-12);
        }
}

TEST(Excitations, TwistedSingleOperatorViolatesThree) {
    CodeSpec spec = twisted_z2z2(2, 4);
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    StateVector gs = code_ground_state(spec);
    auto ps = all_plaquettes(spec);
    for (int g = 1; g < G.order(); ++g) {
        GroupElement e = GroupElement::from_index(G, g);
        for (auto op : {ProductOperator(lat.site_or_throw(1, 1), projective_x(spec.alpha, e)),
                        ProductOperator(lat.site_or_throw(3, 3), projective_x_tilde(spec.alpha, e))}) {
            SyndromeMap m = syndrome(ps, op);
            EXPECT_EQ(m.violated_count(), 3) << g;
            int group_count = 0;
            for (const auto& l : m.violated()) group_count += l.type == PlaquetteType::Group;
            EXPECT_EQ(group_count, 1);
            // State-level cross-check: eigenvalues on op|gs>.
            StateVector ex = apply(op, gs);
            for (size_t p = 0; p < ps.size(); ++p)
                for (size_t k = 0; k < ps[p].ops.size(); ++k)
                    EXPECT_LT(std::abs(expectation(ps[p].ops[k], ex) - m.entries[p].phases[k]->value()), 1e-10);
        }
    }
}

TEST(Excitations, SyndromeIsHomomorphism) {
    std::mt19937_64 rng(21);
    for (const CodeSpec& spec : {torus({3}, 3, 4), twisted_z2z2(3, 4), torus({2, 2}, 2, 2)}) {
        auto ps = all_plaquettes(spec);
        for (int t = 0; t < 20; ++t) {
            ProductOperator a = random_local(spec, rng, 3), b = random_local(spec, rng, 3);
            EXPECT_TRUE(syndrome(ps, a * b) == combine(syndrome(ps, a), syndrome(ps, b)));
        }
    }
}

TEST(Excitations, TwistedGroupSyndromesFollowSlantProduct) {
    std::mt19937_64 rng(4);
    CodeSpec spec = twisted_z2z2(3, 4);
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    auto ps = all_plaquettes(spec);
    for (int t = 0; t < 30; ++t) {
        ProductOperator op = random_local(spec, rng, 2);
        SyndromeMap m = syndrome(ps, op);
        for (int g = 0; g < G.order(); ++g) {
            Phase prod(0, G.phase_modulus());
            for (size_t p = 0; p < ps.size(); ++p) {
                if (ps[p].label.type != PlaquetteType::Group) continue;
                prod *= *m.entries[p].phases[g];
            }
            DualCharacter iota = slant_product(spec.alpha, GroupElement::from_index(G, g));
            ProductOperator zs;
            for (int s = 0; s < lat.site_count(); ++s)
                if (lat.sites()[s].kind == SiteKind::EdgeGroup) zs.times(s, clock_z(iota));
            EXPECT_EQ(prod, *commutation_phase(zs, op)) << t << " " << g;
        }
    }
}

TEST(Excitations, VerticalStringEndpoints) {
    CodeSpec spec = torus({2}, 3, 6);
    const Lattice2D& lat = spec.lattice;
    StringSpec s = vertical_path(lat, 0, 0, 2, StringFlavor::X, 1);
    ASSERT_EQ(s.path.size(), 2u);
    SyndromeMap m = syndrome(spec, string_operator(spec, s));
    std::set<std::pair<int, int>> got;
    for (const auto& l : m.violated()) {
        EXPECT_EQ(l.type, PlaquetteType::Group);
        got.insert({l.row, l.x});
    }
    EXPECT_EQ(got, (std::set<std::pair<int, int>>{{5, 0}, {3, 0}}));

    // Closed around the torus: no syndrome, but not trivial as an operator.
    StringSpec closed = vertical_path(lat, 0, 0, -1, StringFlavor::X, 1);
    EXPECT_TRUE(syndrome(spec, string_operator(spec, closed)).trivial());
    StringSpec zrow = horizontal_path(lat, 0, 0, 3, StringFlavor::Z, 1);
    EXPECT_EQ(braiding_phase(spec, closed, zrow), Phase(1, 2));

    StringSpec e = vertical_path(lat, 1, 1, -1, StringFlavor::X, 0);
    EXPECT_TRUE(string_operator(spec, e).is_identity());

    StringSpec broken;
    broken.path = {lat.site_or_throw(0, 0), lat.site_or_throw(2, 2)};
    EXPECT_THROW(string_operator(spec, broken), SpecError);
    broken.path = {lat.site_or_throw(0, 0), lat.site_or_throw(1, 1)};
    EXPECT_THROW(string_operator(spec, broken), SpecError);
}

TEST(Excitations, Braiding) {
    CodeSpec spec = torus({2}, 3, 6);
    const Lattice2D& lat = spec.lattice;
    StringSpec xs = vertical_path(lat, 1, 1, 3, StringFlavor::X, 1);
    StringSpec once = horizontal_path(lat, 1, 1, 2, StringFlavor::Z, 1);
    EXPECT_EQ(braiding_phase(spec, once, xs), Phase(1, 2));
    StringSpec twice;
    twice.flavor = StringFlavor::Z;
    twice.label = 1;
    twice.path = {lat.site_or_throw(1, 1), lat.site_or_throw(1, 3), lat.site_or_throw(3, 3), lat.site_or_throw(3, 1)};
    EXPECT_TRUE(braiding_phase(spec, twice, xs).is_one());

    CodeSpec z3 = torus({3}, 3, 6);
    const GroupSpec& G = z3.lattice.group();
    for (int g = 0; g < 3; ++g)
        for (int c = 0; c < 3; ++c) {
            StringSpec x3 = vertical_path(z3.lattice, 1, 1, 3, StringFlavor::X, g);
            StringSpec z = horizontal_path(z3.lattice, 1, 1, 2, StringFlavor::Z, c);
            EXPECT_EQ(braiding_phase(z3, z, x3),
                      pair(DualCharacter::from_index(G, c), GroupElement::from_index(G, g)));
        }
}

TEST(Excitations, ConfinementTwistedZ2xZ2) {
    CodeSpec spec = twisted_z2z2(4, 8);
    const GroupSpec& G = spec.lattice.group();
    for (int g = 1; g < G.order(); ++g) {
        ConfinementReport r = confinement_report(spec, GroupElement::from_index(G, g));
        EXPECT_TRUE(r.twisted);
        EXPECT_EQ(r.single_count, 3);
        EXPECT_EQ(r.horizontal_counts, (std::vector<int>{3, 6, 9}));
        EXPECT_NEAR(r.slope, 3.0, 1e-12);
        EXPECT_EQ(r.dipole_counts, (std::vector<int>{4, 4, 4}));
        EXPECT_TRUE(r.bends_relocate());
        for (const auto& b : r.bends) EXPECT_EQ(b.count, 4);
        EXPECT_TRUE(r.dipole_braids_trivially);
        EXPECT_TRUE(r.pass());
    }
}

TEST(Excitations, ConfinementUntwistedDipoleIsEndpointPair) {
    CodeSpec spec = torus({2, 2}, 4, 8);
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    GroupElement g = GroupElement::from_index(G, 1);
    ConfinementReport r = confinement_report(spec, g);
    EXPECT_FALSE(r.twisted);
    EXPECT_EQ(r.single_count, 2);
    EXPECT_EQ(r.dipole_counts, (std::vector<int>{4, 4, 4}));
    ProductOperator ends;
    ends.times(lat.site_or_throw(0, 2), clock_z_dual(g).adjoint());
    ends.times(lat.site_or_throw(2, 2), clock_z_dual(g));
    EXPECT_TRUE(syndrome(spec, dipole_operator(spec, g, 1, 2, 1)) == syndrome(spec, ends));
    // With alpha trivial the dipole is X_g^dag X_g.
    EXPECT_TRUE(dipole_operator(spec, g, 1, 2, 1) ==
                ProductOperator(lat.site_or_throw(1, 1), shift_x(g).adjoint()) *
                    ProductOperator(lat.site_or_throw(1, 3), shift_x(g)));
    EXPECT_THROW(confinement_report(torus({2}, 2, 4), GroupElement::from_index(GroupSpec({2}), 1)), SpecError);
}

TEST(Excitations, CorruptedGaugedStateFailsAdjacentSymmetries) {
    GroupSpec G({2});
    auto layers = make_layers(3, 3, Boundary::Periodic);
    StateVector in = StateVector::basis(std::vector<SiteKind>(3, SiteKind::VertexDual), {2, 2, 2}, {0, 0, 0});
    auto out = compose_gauging(G, layers, in);
    const Lattice2D& lat = out.lattice;
    CodeSpec spec = CodeSpec::untwisted(lat);
    auto ps = bulk_plaquettes(spec);
    auto top = boundary_plaquettes(spec, TermRole::Top);
    ps.insert(ps.end(), top.begin(), top.end());
    for (auto [site, op] : {std::pair{lat.site_or_throw(1, 1), shift_x(GroupElement::from_index(G, 1))},
                            std::pair{lat.site_or_throw(2, 2), shift_x_dual(DualCharacter::from_index(G, 1))},
                            std::pair{lat.site_or_throw(1, 3), clock_z(DualCharacter::from_index(G, 1))}}) {
        ProductOperator corrupt(site, op);
        ComposeResult bad = out;
        bad.state = apply(corrupt, out.state);
        auto rep = verify_local_symmetry(bad, layers);
        SyndromeMap m = syndrome(ps, corrupt);
        std::set<std::string> want;
        for (size_t p = 0; p < ps.size(); ++p)
            for (size_t k = 0; k < ps[p].ops.size(); ++k)
                if (!m.entries[p].phases[k]->is_one())
                    want.insert("layer " + std::to_string(ps[p].label.row - 1) + " x " + std::to_string(ps[p].label.x) +
                                " element " + std::to_string(ps[p].elements[k]));
        EXPECT_FALSE(want.empty());
        EXPECT_EQ(std::set<std::string>(rep.failures.begin(), rep.failures.end()), want);
    }
}

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


#ifndef GAUGE_BOUNDARY_HPP
#define GAUGE_BOUNDARY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gauge/group.hpp"
#include "gauge/lattice.hpp"
#include "gauge/operators.hpp"

namespace gauge {

/// A 1D state with global symmetry, kept in both bases: `group_state` on
/// C[G] sites (symmetry prod X_g) and `state`, its per-site Fourier image on
/// C[G^] sites (symmetry prod Z_g), which is what the gauging maps take.
struct SymmetricState1D {
    GroupSpec group;
    std::vector<GroupElement> unbroken;
    int n = 0;
    StateVector group_state;
    StateVector state;
};

/// F|h> = |G|^{-1/2} sum_chi chi(h)|chi>, on every site. F X_g F^dag = Z_g.
StateVector fourier_to_dual(const GroupSpec& g, const StateVector& psi);

/// Normalized sum over cosets of H of the coset product states.
SymmetricState1D build_fixed_point_state(const GroupSpec& g, const std::vector<GroupElement>& h, int n);
/// Wraps an arbitrary C[G^] state (checked symmetric under prod Z_g).
SymmetricState1D wrap_dual_state(const GroupSpec& g, const StateVector& dual_state);

enum class OrderConvention {
    Dual,   // X~^beta_chi (i), Z_{iota chi beta} on the l-1 sites between, X^beta_chi (i+l), on `state`
    Group,  // Z_chi (i) Z_chi^dag (i+l) on `group_state`; beta must be trivial
};

/// Sites wrap around the ring. Needs 1 <= l < n.
std::complex<double> string_order_expectation(const SymmetricState1D& s, const DualCharacter& chi, const Cocycle& beta,
                                              int i, int ell, OrderConvention conv = OrderConvention::Dual);
ProductOperator string_order_operator(const GroupSpec& g, int n, const DualCharacter& chi, const Cocycle& beta, int i,
                                      int ell);

struct SurvivingReport {
    std::vector<DualCharacter> surviving;
    /// Value at i = 0 for each (chi, l), l = 1..max_ell.
    std::vector<std::vector<std::complex<double>>> raw;
    std::vector<int> ells;
    bool closed = true;
};

/// chi survives when |value - 1| < tol for every l <= max_ell and every i.
SurvivingReport surviving_boundary_terms(const SymmetricState1D& s, const Cocycle& beta, int max_ell = 3,
                                         double tol = 1e-9);

struct AnyonEntry {
    std::string type;  // "g": vertical X_g on edges; "chi": vertical X_chi on vertices
    int label = 0;
    std::string label_str;
    bool condenses = false;
    /// Unset when nothing is asserted (chi-type under nontrivial beta).
    std::optional<bool> expected;
    std::vector<PlaquetteLabel> violated;
};

struct CondensationReport {
    std::vector<DualCharacter> surviving;
    std::vector<AnyonEntry> anyons;
    bool pass() const;
};

/// Bottom boundary terms are those of the surviving characters; each anyon
/// string starts on the boundary and is checked against them.
CondensationReport condensation_table(const CodeSpec& spec, const SymmetricState1D& s);

}  // namespace gauge

#endif

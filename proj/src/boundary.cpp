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

#include <algorithm>
#include <cmath>
#include <set>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool symmetric_under(const StateVector& psi, const std::vector<MonomialOperator>& site_ops) {
    double nn = psi.norm();
    nn *= nn;
    for (const auto& u : site_ops) {
        ProductOperator op;
        for (int s = 0; s < psi.site_count(); ++s) op.times(s, u);
        if (std::abs(expectation(op, psi) / nn - 1.0) > 1e-10) return false;
    }
    return true;
}

}  // namespace

StateVector fourier_to_dual(const GroupSpec& g, const StateVector& psi) {
    const int d = g.order();
    std::vector<std::complex<double>> f(d * d);  // f[chi * d + h] = chi(h) / sqrt d
    for (int c = 0; c < d; ++c)
        for (int h = 0; h < d; ++h)
            f[c * d + h] = pair(DualCharacter::from_index(g, c), GroupElement::from_index(g, h)).value() / std::sqrt(d);
    StateVector cur = psi;
    for (int s = 0; s < psi.site_count(); ++s) {
        if (psi.kinds()[s] != SiteKind::EdgeGroup || psi.dims()[s] != d)
            throw SpecError("fourier_to_dual: expects C[G] sites");
        auto kinds = cur.kinds();
        kinds[s] = SiteKind::VertexDual;
        StateVector next(kinds, cur.dims());
        size_t st = cur.stride(s);
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == std::complex<double>(0)) continue;
            int h = static_cast<int>((i / st) % d);
            size_t base = i - h * st;
            for (int c = 0; c < d; ++c) next[base + c * st] += f[c * d + h] * cur[i];
        }
        cur = std::move(next);
    }
    return cur;
}

SymmetricState1D build_fixed_point_state(const GroupSpec& g, const std::vector<GroupElement>& h, int n) {
    if (n < 2) throw SpecError("fixed-point state needs N >= 2");
    if (!is_subgroup(g, h)) throw SpecError("fixed-point state: H is not a subgroup");
    SymmetricState1D out;
    out.group = g;
    out.unbroken = h;
    out.n = n;
    const int d = g.order();
    // coset[x] = smallest element index of xH.
    std::vector<int> coset(d);
    for (int x = 0; x < d; ++x) {
        int best = d;
        for (const auto& e : h) best = std::min(best, compose(GroupElement::from_index(g, x), e).index());
        coset[x] = best;
    }
    out.group_state = StateVector(std::vector<SiteKind>(n, SiteKind::EdgeGroup), std::vector<int>(n, d));
    for (size_t i = 0; i < out.group_state.size(); ++i) {
        auto dg = out.group_state.digits(i);
        bool same = std::all_of(dg.begin(), dg.end(), [&](int x) { return coset[x] == coset[dg[0]]; });
        if (same) out.group_state[i] = 1.0;
    }
    out.group_state.normalize();
    out.state = fourier_to_dual(g, out.group_state);
    return out;
}

SymmetricState1D wrap_dual_state(const GroupSpec& g, const StateVector& dual_state) {
    for (int s = 0; s < dual_state.site_count(); ++s)
        if (dual_state.kinds()[s] != SiteKind::VertexDual || dual_state.dims()[s] != g.order())
            throw SpecError("wrap_dual_state: expects C[G^] sites");
    std::vector<MonomialOperator> us;
    for (const auto& e : elements(g)) us.push_back(clock_z_dual(e));
    if (!symmetric_under(dual_state, us)) throw SpecError("wrap_dual_state: state is not symmetric");
    SymmetricState1D out;
    out.group = g;
    out.n = dual_state.site_count();
    out.state = dual_state;
    out.state.normalize();
    return out;
}

ProductOperator string_order_operator(const GroupSpec& g, int n, const DualCharacter& chi, const Cocycle& beta, int i,
                                      int ell) {
    if (ell < 1 || ell >= n) throw SpecError("string order: need 1 <= l < N");
    if (chi.group() != g || beta.group() != g) throw SpecError("string order: mismatched groups");
    GroupElement iota = as_dual_group_element(slant_product(beta, as_dual_group_element(chi)));
    ProductOperator op;
    op.times(mod(i, n), projective_x_tilde_dual(beta, chi));
    for (int k = 1; k < ell; ++k) op.times(mod(i + k, n), clock_z_dual(iota));
    op.times(mod(i + ell, n), projective_x_dual(beta, chi));
    return op;
}

std::complex<double> string_order_expectation(const SymmetricState1D& s, const DualCharacter& chi, const Cocycle& beta,
                                              int i, int ell, OrderConvention conv) {
    if (conv == OrderConvention::Dual) {
        double nn = s.state.norm();
        return expectation(string_order_operator(s.group, s.n, chi, beta, i, ell), s.state) / (nn * nn);
    }
    if (!beta.is_trivial()) throw SpecError("string order: the C[G] convention needs trivial beta");
    if (s.group_state.size() == 0) throw SpecError("string order: no C[G] state available");
    if (ell < 1 || ell >= s.n) throw SpecError("string order: need 1 <= l < N");
    ProductOperator op;
    op.times(mod(i, s.n), clock_z(chi));
    op.times(mod(i + ell, s.n), clock_z(chi).adjoint());
    double nn = s.group_state.norm();
    return expectation(op, s.group_state) / (nn * nn);
}

SurvivingReport surviving_boundary_terms(const SymmetricState1D& s, const Cocycle& beta, int max_ell, double tol) {
    SurvivingReport rep;
    int top = std::min(max_ell, s.n - 1);
    for (int l = 1; l <= top; ++l) rep.ells.push_back(l);
    for (const auto& chi : characters(s.group)) {
        std::vector<std::complex<double>> row;
        bool ok = true;
        for (int l : rep.ells) {
            for (int i = 0; i < s.n; ++i) {
                auto v = string_order_expectation(s, chi, beta, i, l);
                if (i == 0) row.push_back(v);
                if (!(std::abs(v - 1.0) < tol)) ok = false;
            }
        }
        rep.raw.push_back(row);
        if (ok) rep.surviving.push_back(chi);
    }
    std::set<int> idx;
    for (const auto& c : rep.surviving) idx.insert(c.index());
    for (const auto& a : rep.surviving)
        for (const auto& b : rep.surviving)
            if (!idx.count(compose(a, b).index())) rep.closed = false;
    return rep;
}

bool CondensationReport::pass() const {
    return std::all_of(anyons.begin(), anyons.end(),
                       [](const AnyonEntry& a) { return !a.expected || *a.expected == a.condenses; });
}

CondensationReport condensation_table(const CodeSpec& spec, const SymmetricState1D& s) {
    spec.validate();
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    if (lat.vertical() != Boundary::Open) throw SpecError("condensation: needs a vertically open code");
    if (s.group != G) throw SpecError("condensation: boundary state on another group");
    CondensationReport rep;
    SurvivingReport sv = surviving_boundary_terms(s, spec.beta);
    if (!sv.closed) throw InternalConsistencyError("condensation: surviving characters are not a subgroup");
    rep.surviving = sv.surviving;
    auto terms = boundary_plaquettes(spec, TermRole::Bottom, rep.surviving);

    std::set<int> h;
    for (const auto& e : s.unbroken) h.insert(e.index());
    int top_row = std::min(3, lat.rows() - 1);
    auto check = [&](AnyonEntry& a, const ProductOperator& str) {
        for (const auto& p : terms)
            for (const auto& t : p.ops) {
                auto ph = commutation_phase(t, str);
                if (!ph || !ph->is_one()) {
                    if (a.violated.empty() || !(a.violated.back() == p.label)) a.violated.push_back(p.label);
                }
            }
        a.condenses = a.violated.empty();
    };
    for (const auto& g : elements(G)) {
        AnyonEntry a;
        a.type = "g";
        a.label = g.index();
        a.label_str = g.str();
        if (!s.unbroken.empty() && spec.beta.is_trivial()) a.expected = h.count(g.index()) > 0;
        check(a, vertical_x_group_string(lat, 1, g, 1, top_row));
        rep.anyons.push_back(std::move(a));
    }
    for (const auto& chi : characters(G)) {
        AnyonEntry a;
        a.type = "chi";
        a.label = chi.index();
        a.label_str = chi.str();
        if (spec.beta.is_trivial()) a.expected = true;
        check(a, vertical_x_dual_string(lat, 0, chi, 0, std::min(2, lat.rows() - 1)));
        rep.anyons.push_back(std::move(a));
    }
    return rep;
}

}  // namespace gauge

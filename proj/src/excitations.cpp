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

#include <algorithm>

#include "gauge/errors.hpp"

namespace gauge {

// ---------------------------------------------------------------- syndromes

int SyndromeMap::violated_count() const {
    int c = 0;
    for (const auto& e : entries) c += e.violated;
    return c;
}

std::vector<PlaquetteLabel> SyndromeMap::violated() const {
    std::vector<PlaquetteLabel> out;
    for (const auto& e : entries)
        if (e.violated) out.push_back(e.label);
    return out;
}

bool SyndromeMap::all_scalar() const {
    return std::all_of(entries.begin(), entries.end(), [](const SyndromeEntry& e) { return e.scalar; });
}

bool SyndromeMap::operator==(const SyndromeMap& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto &a = entries[i], &b = o.entries[i];
        if (!(a.label == b.label) || a.phases.size() != b.phases.size()) return false;
        for (size_t k = 0; k < a.phases.size(); ++k) {
            if (a.phases[k].has_value() != b.phases[k].has_value()) return false;
            if (a.phases[k] && *a.phases[k] != *b.phases[k]) return false;
        }
    }
    return true;
}

SyndromeMap syndrome(const std::vector<Plaquette>& plaquettes, const ProductOperator& op) {
    SyndromeMap m;
    m.entries.reserve(plaquettes.size());
    for (const auto& p : plaquettes) {
        SyndromeEntry e;
        e.label = p.label;
        for (const auto& s : p.ops) {
            auto ph = commutation_phase(s, op);
            if (!ph) {
                e.scalar = false;
                e.violated = true;
            } else if (!ph->is_one()) {
                e.violated = true;
            }
            e.phases.push_back(ph);
        }
        m.entries.push_back(std::move(e));
    }
    return m;
}

SyndromeMap syndrome(const CodeSpec& spec, const ProductOperator& op) { return syndrome(all_plaquettes(spec), op); }

SyndromeMap combine(const SyndromeMap& a, const SyndromeMap& b) {
    if (a.entries.size() != b.entries.size()) throw SpecError("combine: syndromes of different codes");
    SyndromeMap out = a;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        auto& e = out.entries[i];
        const auto& f = b.entries[i];
        if (!(e.label == f.label) || e.phases.size() != f.phases.size())
            throw SpecError("combine: syndromes of different codes");
        e.violated = false;
        e.scalar = e.scalar && f.scalar;
        for (size_t k = 0; k < e.phases.size(); ++k) {
            if (e.phases[k] && f.phases[k])
                e.phases[k] = *e.phases[k] * *f.phases[k];
            else
                e.phases[k].reset();
            if (!e.phases[k] || !e.phases[k]->is_one()) e.violated = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------- strings

namespace {

bool adjacent(const Lattice2D& lat, int a, int b) {
    const SiteInfo& s = lat.sites()[a];
    for (auto [dr, dx] : {std::pair{0, 2}, {0, -2}, {2, 0}, {-2, 0}}) {
        auto n = lat.site(s.row + dr, s.x + dx);
        if (n && *n == b) return true;
    }
    return false;
}

MonomialOperator string_factor(const CodeSpec& spec, SiteKind kind, const StringSpec& s) {
    const GroupSpec& G = spec.lattice.group();
    if (s.label < 0 || s.label >= G.order()) throw SpecError("string: label out of range");
    bool edge = kind == SiteKind::EdgeGroup;
    if (s.flavor == StringFlavor::X) {
        if (edge) {
            GroupElement g = GroupElement::from_index(G, s.label);
            return s.twisted ? projective_x(spec.alpha, g) : shift_x(g);
        }
        DualCharacter chi = DualCharacter::from_index(G, s.label);
        return s.twisted ? projective_x_dual(spec.gamma, chi) : shift_x_dual(chi);
    }
    if (edge) return clock_z(DualCharacter::from_index(G, s.label));
    return clock_z_dual(GroupElement::from_index(G, s.label));
}

}  // namespace

ProductOperator string_operator(const CodeSpec& spec, const StringSpec& s) {
    const Lattice2D& lat = spec.lattice;
    ProductOperator op;
    for (size_t k = 0; k < s.path.size(); ++k) {
        int site = s.path[k];
        if (site < 0 || site >= lat.site_count()) throw SpecError("string: site out of range");
        if (std::find(s.path.begin(), s.path.begin() + k, site) != s.path.begin() + k)
            throw SpecError("string: path repeats a site");
        SiteKind kind = lat.sites()[site].kind;
        if (k > 0) {
            if (lat.sites()[s.path[k - 1]].kind != kind) throw SpecError("string: path mixes site kinds");
            if (!adjacent(lat, s.path[k - 1], site)) throw SpecError("string: path is not connected");
        }
        op.times(site, string_factor(spec, kind, s));
    }
    return op;
}

StringSpec vertical_path(const Lattice2D& lat, int x, int row_from, int row_to, StringFlavor flavor, int label) {
    if (row_to < 0) row_to = lat.rows() - 1;
    StringSpec s;
    s.flavor = flavor;
    s.label = label;
    for (int r = row_from; r <= row_to; ++r) {
        if ((r % 2 == 0) != (((x % 2) + 2) % 2 == 0)) continue;
        s.path.push_back(lat.site_or_throw(r, x));
    }
    return s;
}

StringSpec horizontal_path(const Lattice2D& lat, int row, int x, int length, StringFlavor flavor, int label) {
    StringSpec s;
    s.flavor = flavor;
    s.label = label;
    for (int t = 0; t < length; ++t) s.path.push_back(lat.site_or_throw(row, x + 2 * t));
    return s;
}

Phase braiding_phase(const CodeSpec& spec, const StringSpec& s1, const StringSpec& s2) {
    auto ph = commutation_phase(string_operator(spec, s1), string_operator(spec, s2));
    if (!ph) throw InternalConsistencyError("braiding: string operators do not commute up to a scalar");
    return *ph;
}

// ---------------------------------------------------------------- confinement

ProductOperator dipole_operator(const CodeSpec& spec, const GroupElement& g, int row, int x, int separation) {
    const Lattice2D& lat = spec.lattice;
    if (row % 2 == 0 || x % 2 != 0) throw SpecError("dipole: Group plaquettes are centered on an edge row, even x");
    ProductOperator op;
    for (int t = 0; t < separation; ++t) {
        op.times(lat.site_or_throw(row + 2 * t, x - 1), projective_x_tilde(spec.alpha, g));
        op.times(lat.site_or_throw(row + 2 * t, x + 1), projective_x(spec.alpha, g));
    }
    return op;
}

bool ConfinementReport::horizontal_growing() const {
    for (size_t i = 1; i < horizontal_counts.size(); ++i)
        if (horizontal_counts[i] <= horizontal_counts[i - 1]) return false;
    return slope > 0;
}

bool ConfinementReport::dipole_constant() const {
    return std::adjacent_find(dipole_counts.begin(), dipole_counts.end(), std::not_equal_to<>()) ==
           dipole_counts.end();
}

bool ConfinementReport::bends_relocate() const {
    return std::all_of(bends.begin(), bends.end(), [](const BendCase& b) { return b.relocated; });
}

bool ConfinementReport::pass() const {
    bool common = horizontal_growing() && dipole_constant() && bends_relocate() && dipole_braids_trivially;
    return twisted ? common && single_odd() : common;
}

ConfinementReport confinement_report(const CodeSpec& spec, const GroupElement& g, int max_length) {
    spec.validate();
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    if (g.group() != G) throw SpecError("confinement: element from another group");
    if (max_length < 1) throw SpecError("confinement: max_length must be >= 1");
    if (!lat.is_torus() || lat.n() <= max_length || lat.m() < 2 * max_length + 2)
        throw SpecError("confinement: needs a torus with N > " + std::to_string(max_length) + " and M >= " +
                        std::to_string(2 * max_length + 2));
    auto plaquettes = all_plaquettes(spec);
    auto count = [&](const ProductOperator& op) { return syndrome(plaquettes, op).violated_count(); };

    ConfinementReport rep;
    rep.g = g;
    rep.twisted = !spec.alpha.is_trivial();
    rep.single_count = count(ProductOperator(lat.site_or_throw(1, 1), projective_x(spec.alpha, g)));

    for (int l = 1; l <= max_length; ++l) {
        ProductOperator op;
        for (int t = 0; t < l; ++t) op.times(lat.site_or_throw(1, 1 + 2 * t), projective_x(spec.alpha, g));
        rep.lengths.push_back(l);
        rep.horizontal_counts.push_back(count(op));
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < rep.lengths.size(); ++i) {
        mx += rep.lengths[i];
        my += rep.horizontal_counts[i];
    }
    mx /= rep.lengths.size();
    my /= rep.lengths.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < rep.lengths.size(); ++i) {
        sxy += (rep.lengths[i] - mx) * (rep.horizontal_counts[i] - my);
        sxx += (rep.lengths[i] - mx) * (rep.lengths[i] - mx);
    }
    rep.slope = sxx > 0 ? sxy / sxx : 0.0;

    for (int s = 1; s <= max_length; ++s) {
        rep.separations.push_back(s);
        rep.dipole_counts.push_back(count(dipole_operator(spec, g, 1, 2, s)));
    }

    // On the ground state the dipole at (1,2) acts as Z_g^dag at (0,2) times
    // Z_g at (2,2). Moving the top endpoint along row 2 must relocate exactly
    // that excitation.
    ProductOperator dip = dipole_operator(spec, g, 1, 2, 1);
    MonomialOperator z = clock_z_dual(g);
    for (int k = -max_length; k <= max_length; ++k) {
        if (k == 0) continue;
        ProductOperator w;
        w.times(lat.site_or_throw(2, 2), z.adjoint());
        w.times(lat.site_or_throw(2, 2 + 2 * k), z);
        ProductOperator endpoints;
        endpoints.times(lat.site_or_throw(0, 2), z.adjoint());
        endpoints.times(lat.site_or_throw(2, 2 + 2 * k), z);
        SyndromeMap moved = syndrome(plaquettes, w * dip);
        BendCase b;
        b.shift = k;
        b.count = moved.violated_count();
        b.relocated = moved == syndrome(plaquettes, endpoints);
        rep.bends.push_back(b);
    }

    for (int s = 1; s <= max_length; ++s) {
        ProductOperator d = dipole_operator(spec, g, 1, 2, s);
        for (int r = 1; r < 2 * s; r += 2)
            for (int c = 0; c < G.order(); ++c) {
                auto ph = commutation_phase(d, horizontal_z_dual_string(lat, r, DualCharacter::from_index(G, c)));
                if (!ph || !ph->is_one()) rep.dipole_braids_trivially = false;
            }
    }
    return rep;
}

}  // namespace gauge

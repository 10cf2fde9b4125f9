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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "gauge/errors.hpp"
#include "gauge/kernels.hpp"
#include "gauge/lattice.hpp"

namespace gauge {

const char* plaquette_type_name(PlaquetteType t) { return t == PlaquetteType::Group ? "G" : "Ghat"; }

const char* term_role_name(TermRole r) {
    switch (r) {
        case TermRole::Bulk:
            return "bulk";
        case TermRole::Bottom:
            return "bottom";
        case TermRole::Top:
            return "top";
    }
    return "?";
}

const char* dimension_method_name(DimensionMethod m) {
    switch (m) {
        case DimensionMethod::Auto:
            return "auto";
        case DimensionMethod::TraceExpansion:
            return "trace_expansion";
        case DimensionMethod::GroupCounting:
            return "group_counting";
        case DimensionMethod::DenseOracle:
            return "dense_oracle";
    }
    return "?";
}

bool PlaquetteLabel::operator<(const PlaquetteLabel& o) const {
    return std::tie(role, row, x, type) < std::tie(o.role, o.row, o.x, o.type);
}

std::string PlaquetteLabel::str() const {
    std::ostringstream os;
    os << term_role_name(role) << ":" << plaquette_type_name(type) << "@(" << row << "," << x << ")";
    return os.str();
}

CodeSpec CodeSpec::untwisted(const Lattice2D& lattice) {
    CodeSpec s;
    s.lattice = lattice;
    s.alpha = Cocycle::trivial(lattice.group());
    s.gamma = Cocycle::trivial(lattice.group());
    s.beta = Cocycle::trivial(lattice.group());
    return s;
}

void CodeSpec::validate() const {
    const GroupSpec& G = lattice.group();
    if (alpha.group() != G) throw SpecError("even-layer twist is defined on another group");
    if (gamma.group() != G) throw SpecError("odd-layer twist is defined on another group");
    if (beta.group() != G) throw SpecError("boundary twist is defined on another group");
    if (lattice.m() < 2) throw SpecError("code lattice needs M >= 2");
    if (boundary_subgroup && !is_subgroup(G, *boundary_subgroup)) {
        throw SpecError("boundary subgroup is not closed under the group law");
    }
}

namespace {

struct Corner {
    int row, x;
};

Plaquette make_plaquette(const CodeSpec& spec, PlaquetteLabel label, int bottom_row, int x, bool with_top) {
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    Plaquette p;
    p.label = label;
    p.group = G;
    int left = lat.site_or_throw(bottom_row + 1, x - 1);
    int right = lat.site_or_throw(bottom_row + 1, x + 1);
    int bottom = lat.site_or_throw(bottom_row, x);
    std::optional<int> top;
    if (with_top) top = lat.site_or_throw(bottom_row + 2, x);
    if (left == right) throw SpecError("geometry inconsistency: plaquette left and right corners coincide");
    std::set<int> s{left, right, bottom};
    if (top) s.insert(*top);
    p.sites.assign(s.begin(), s.end());
    bool group_type = label.type == PlaquetteType::Group;
    for (int a = 0; a < G.order(); ++a) {
        MonomialOperator l, r, b;
        if (group_type) {
            GroupElement g = GroupElement::from_index(G, a);
            l = projective_x_tilde(spec.alpha, g);
            r = projective_x(spec.alpha, g);
            b = clock_z_dual(g);
        } else {
            DualCharacter chi = DualCharacter::from_index(G, a);
            l = projective_x_tilde_dual(spec.gamma, chi);
            r = projective_x_dual(spec.gamma, chi);
            b = clock_z(chi);
        }
        if (spec.reflected) std::swap(l, r);
        ProductOperator op;
        op.times(left, l);
        op.times(right, r);
        op.times(bottom, b);
        if (top) op.times(*top, b.adjoint());
        p.elements.push_back(a);
        p.ops.push_back(op);
    }
    return p;
}

}  // namespace

std::vector<Plaquette> bulk_plaquettes(const CodeSpec& spec) {
    spec.validate();
    const Lattice2D& lat = spec.lattice;
    std::vector<Plaquette> out;
    int last_bottom = lat.is_torus() ? lat.m() - 1 : lat.m() - 2;
    for (int j = 0; j <= last_bottom; ++j) {
        PlaquetteType type = j % 2 == 0 ? PlaquetteType::Group : PlaquetteType::Dual;
        for (int x : lat.row_positions(j)) {
            int center_row = lat.is_torus() ? (j + 1) % lat.m() : j + 1;
            out.push_back(make_plaquette(spec, {center_row, x, type, TermRole::Bulk}, j, x, true));
        }
    }
    return out;
}

std::vector<Plaquette> boundary_plaquettes(const CodeSpec& spec, TermRole which,
                                           const std::optional<std::vector<DualCharacter>>& allowed) {
    spec.validate();
    const Lattice2D& lat = spec.lattice;
    const GroupSpec& G = lat.group();
    if (lat.vertical() != Boundary::Open) throw SpecError("boundary terms need a vertically open lattice");
    std::vector<Plaquette> out;
    if (which == TermRole::Top) {
        int j = lat.m() - 1;
        PlaquetteType type = j % 2 == 0 ? PlaquetteType::Group : PlaquetteType::Dual;
        for (int x : lat.row_positions(j)) {
            out.push_back(make_plaquette(spec, {j + 1, x, type, TermRole::Top}, j, x, false));
        }
        return out;
    }
    if (which != TermRole::Bottom) throw SpecError("boundary terms are bottom or top");
    std::vector<int> chars;
    if (allowed) {
        for (const auto& c : *allowed) {
            if (c.group() != G) throw SpecError("allowed boundary character from another group");
            chars.push_back(c.index());
        }
    } else if (spec.boundary_subgroup) {
        for (const auto& c : restriction_kernel(G, *spec.boundary_subgroup)) chars.push_back(c.index());
    } else {
        for (int c = 0; c < G.order(); ++c) chars.push_back(c);
    }
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    if (generated_subgroup(G, chars) != chars) throw SpecError("allowed boundary characters do not form a subgroup");
    for (int x : lat.row_positions(1)) {
        auto left = lat.site(0, x - 1);
        auto right = lat.site(0, x + 1);
        if (!left || !right) continue;
        int mid = lat.site_or_throw(1, x);
        Plaquette p;
        p.label = {0, x, PlaquetteType::Dual, TermRole::Bottom};
        p.group = G;
        p.sites = {std::min(*left, *right), mid, std::max(*left, *right)};
        std::sort(p.sites.begin(), p.sites.end());
        for (int c : chars) {
            DualCharacter chi = DualCharacter::from_index(G, c);
            MonomialOperator l = projective_x_tilde_dual(spec.beta, chi);
            MonomialOperator r = projective_x_dual(spec.beta, chi);
            if (spec.reflected) std::swap(l, r);
            ProductOperator op;
            op.times(*left, l);
            op.times(mid, clock_z(chi).adjoint());
            op.times(*right, r);
            p.elements.push_back(c);
            p.ops.push_back(op);
        }
        out.push_back(p);
    }
    return out;
}

std::vector<Plaquette> all_plaquettes(const CodeSpec& spec) {
    auto out = bulk_plaquettes(spec);
    if (!spec.lattice.is_torus()) {
        for (auto& p : boundary_plaquettes(spec, TermRole::Bottom)) out.push_back(std::move(p));
        for (auto& p : boundary_plaquettes(spec, TermRole::Top)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<StabilizerTerm> terms_of(const std::vector<Plaquette>& plaquettes) {
    std::vector<StabilizerTerm> out;
    for (const auto& p : plaquettes) {
        for (size_t i = 0; i < p.elements.size(); ++i) {
            if (p.elements[i] == 0) continue;
            out.push_back({p.label, p.elements[i], p.ops[i]});
        }
    }
    return out;
}

std::vector<StabilizerTerm> build_bulk_stabilizers(const CodeSpec& spec) { return terms_of(bulk_plaquettes(spec)); }

std::vector<StabilizerTerm> build_boundary_terms(const CodeSpec& spec, TermRole which,
                                                 const std::optional<std::vector<DualCharacter>>& allowed) {
    return terms_of(boundary_plaquettes(spec, which, allowed));
}

CommuteReport check_all_commute(const std::vector<StabilizerTerm>& terms) {
    CommuteReport rep;
    const int64_t n = static_cast<int64_t>(terms.size());
    std::vector<std::vector<std::pair<int, int>>> fails(n);
#pragma omp parallel for schedule(dynamic) num_threads(kernels::threads())
    for (int64_t i = 0; i < n; ++i) {
        for (int64_t j = i + 1; j < n; ++j) {
            auto c = commutation_phase(terms[i].op, terms[j].op);
            if (!c || !c->is_one()) fails[i].push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    }
    rep.pairs_checked = n * (n - 1) / 2;
    for (auto& f : fails) rep.failures.insert(rep.failures.end(), f.begin(), f.end());
    rep.ok = rep.failures.empty();
    return rep;
}

// ---------------------------------------------------------------- dimension

double expansion_bits(const std::vector<Plaquette>& plaquettes) {
    double b = 0;
    for (const auto& p : plaquettes) b += std::log2(static_cast<double>(p.elements.size()));
    return b;
}

namespace {

struct ExactFactor {
    int site;
    std::vector<int> perm;
    std::vector<int> phase;
};
using ExactOp = std::vector<ExactFactor>;

ExactOp exact_of(const ProductOperator& op) {
    ExactOp e;
    for (const auto& [site, m] : op.factors()) {
        if (m.is_identity()) continue;
        e.push_back({site, m.perm(), m.phases()});
    }
    return e;
}

uint64_t checked_pow(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (uint64_t(1) << 62) / b) throw CapExceeded("Hilbert space dimension overflows 64 bits");
        r *= b;
    }
    return r;
}

}  // namespace

DimensionResult trace_expansion_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                          int site_count, bool parallel) {
    const int d = site_group.order();
    const int L = site_group.phase_modulus();
    const int P = static_cast<int>(plaquettes.size());
    std::vector<std::vector<ExactOp>> ops(P);
    Int128 domain = 1;
    for (int p = 0; p < P; ++p) {
        for (const auto& op : plaquettes[p].ops) ops[p].push_back(exact_of(op));
        domain *= static_cast<Int128>(ops[p].size());
    }
    // Prefix tasks: enumerate the first `split` plaquettes, DFS the rest.
    int split = 0;
    int64_t tasks = 1;
    while (split < P && tasks < 256) tasks *= static_cast<int64_t>(ops[split++].size());

    auto run_task = [&](int64_t task) -> Cyclotomic {
        std::vector<int> perm(static_cast<size_t>(site_count) * d), phase(perm.size(), 0);
        for (int s = 0; s < site_count; ++s) {
            for (int b = 0; b < d; ++b) perm[s * d + b] = b;
        }
        auto apply_op = [&](const ExactOp& op, std::vector<int>& saved) {
            for (const auto& f : op) {
                int* pp = &perm[f.site * d];
                int* ph = &phase[f.site * d];
                saved.insert(saved.end(), pp, pp + d);
                saved.insert(saved.end(), ph, ph + d);
                for (int b = 0; b < d; ++b) {
                    int y = pp[b];
                    pp[b] = f.perm[y];
                    ph[b] = (ph[b] + f.phase[y]) % L;
                }
            }
        };
        auto restore = [&](const ExactOp& op, const std::vector<int>& saved) {
            size_t off = 0;
            for (const auto& f : op) {
                std::copy(saved.begin() + off, saved.begin() + off + d, &perm[f.site * d]);
                off += d;
                std::copy(saved.begin() + off, saved.begin() + off + d, &phase[f.site * d]);
                off += d;
            }
        };
        int64_t rem = task;
        std::vector<int> choice(split);
        for (int p = split - 1; p >= 0; --p) {
            int k = static_cast<int>(ops[p].size());
            choice[p] = static_cast<int>(rem % k);
            rem /= k;
        }
        std::vector<int> scratch;
        for (int p = 0; p < split; ++p) apply_op(ops[p][choice[p]], scratch);

        Cyclotomic acc(L);
        std::vector<Int128> tr(L), prod(L), tmp(L);
        auto leaf = [&]() {
            std::fill(prod.begin(), prod.end(), 0);
            prod[0] = 1;
            for (int s = 0; s < site_count; ++s) {
                std::fill(tr.begin(), tr.end(), 0);
                bool any = false;
                for (int b = 0; b < d; ++b) {
                    if (perm[s * d + b] == b) {
                        tr[phase[s * d + b]] += 1;
                        any = true;
                    }
                }
                if (!any) return;
                std::fill(tmp.begin(), tmp.end(), 0);
                for (int i = 0; i < L; ++i) {
                    if (!prod[i]) continue;
                    for (int j = 0; j < L; ++j) {
                        if (tr[j]) tmp[(i + j) % L] += prod[i] * tr[j];
                    }
                }
                prod.swap(tmp);
            }
            for (int i = 0; i < L; ++i) {
                if (prod[i]) acc.add_root(i, prod[i]);
            }
        };
        std::vector<std::vector<int>> saved(P);
        // Iterative DFS over plaquettes split..P-1.
        std::vector<int> idx(P, -1);
        int depth = split;
        if (depth == P) {
            leaf();
            return acc;
        }
        while (depth >= split) {
            if (idx[depth] >= 0) restore(ops[depth][idx[depth]], saved[depth]);
            ++idx[depth];
            if (idx[depth] == static_cast<int>(ops[depth].size())) {
                idx[depth] = -1;
                --depth;
                continue;
            }
            saved[depth].clear();
            apply_op(ops[depth][idx[depth]], saved[depth]);
            if (depth + 1 == P) {
                leaf();
            } else {
                ++depth;
            }
        }
        return acc;
    };

    std::vector<Cyclotomic> partial(tasks);
    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(kernels::threads())
        for (int64_t t = 0; t < tasks; ++t) partial[t] = run_task(t);
    } else {
        for (int64_t t = 0; t < tasks; ++t) partial[t] = run_task(t);
    }
    Cyclotomic total(L);
    for (const auto& c : partial) total += c;
    auto n = total.as_integer();
    if (!n) throw InternalConsistencyError("trace expansion did not sum to a rational integer");
    if (*n % domain != 0) throw InternalConsistencyError("trace expansion sum is not divisible by the domain size");
    DimensionResult r;
    r.dimension = static_cast<uint64_t>(*n / domain);
    r.method = DimensionMethod::TraceExpansion;
    r.trace_sum = int128_to_string(*n);
    return r;
}

DimensionResult dense_oracle_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                       int site_count, uint64_t cap) {
    const int d = site_group.order();
    const int L = site_group.phase_modulus();
    uint64_t D = checked_pow(d, site_count);
    if (D > cap) throw CapExceeded("dense oracle: dimension " + std::to_string(D) + " exceeds cap");
    std::vector<size_t> stride(site_count);
    {
        size_t s = 1;
        for (int i = site_count - 1; i >= 0; --i) {
            stride[i] = s;
            s *= d;
        }
    }
    // Generators: every plaquette operator for a generating set of its elements.
    std::vector<ExactOp> gens;
    for (const auto& p : plaquettes) {
        auto gs = generating_set(p.group, p.elements);
        for (int g : gs) {
            auto it = std::find(p.elements.begin(), p.elements.end(), g);
            gens.push_back(exact_of(p.ops[it - p.elements.begin()]));
        }
    }
    std::vector<int> theta(D, -1);
    uint64_t consistent = 0;
    std::vector<uint64_t> queue;
    for (uint64_t seed = 0; seed < D; ++seed) {
        if (theta[seed] >= 0) continue;
        bool ok = true;
        queue.clear();
        queue.push_back(seed);
        theta[seed] = 0;
        for (size_t q = 0; q < queue.size(); ++q) {
            uint64_t x = queue[q];
            for (const auto& g : gens) {
                uint64_t y = x;
                int64_t ph = theta[x];
                for (const auto& f : g) {
                    int b = static_cast<int>((x / stride[f.site]) % d);
                    y += (static_cast<int64_t>(f.perm[b]) - b) * static_cast<int64_t>(stride[f.site]);
                    ph += f.phase[b];
                }
                int t = static_cast<int>(ph % L);
                if (theta[y] < 0) {
                    theta[y] = t;
                    queue.push_back(y);
                } else if (theta[y] != t) {
                    ok = false;
                }
            }
        }
        if (ok) ++consistent;
    }
    DimensionResult r;
    r.dimension = consistent;
    r.method = DimensionMethod::DenseOracle;
    return r;
}

DimensionResult ground_space_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                       int site_count, const DimensionOptions& opts) {
    switch (opts.method) {
        case DimensionMethod::TraceExpansion:
            if (expansion_bits(plaquettes) > opts.trace_cap_bits + 1e-9) {
                throw CapExceeded("trace expansion over " + std::to_string(expansion_bits(plaquettes)) +
                                  " bits exceeds the cap of " + std::to_string(opts.trace_cap_bits));
            }
            return trace_expansion_dimension(plaquettes, site_group, site_count, opts.parallel);
        case DimensionMethod::GroupCounting:
            return group_counting_dimension(plaquettes, site_group, site_count);
        case DimensionMethod::DenseOracle:
            return dense_oracle_dimension(plaquettes, site_group, site_count, opts.dense_cap);
        case DimensionMethod::Auto:
            break;
    }
    if (expansion_bits(plaquettes) <= opts.trace_cap_bits + 1e-9) {
        return trace_expansion_dimension(plaquettes, site_group, site_count, opts.parallel);
    }
    return group_counting_dimension(plaquettes, site_group, site_count);
}

DimensionResult ground_space_dimension(const CodeSpec& spec, const DimensionOptions& opts) {
    return ground_space_dimension(all_plaquettes(spec), spec.lattice.group(), spec.lattice.site_count(), opts);
}

// ---------------------------------------------------------------- states

StateVector project(const std::vector<Plaquette>& plaquettes, const StateVector& psi) {
    StateVector cur = psi;
    for (const auto& p : plaquettes) {
        StateVector next(cur.kinds(), cur.dims());
        cplx w = 1.0 / static_cast<double>(p.ops.size());
        for (const auto& op : p.ops) {
            check_support(op, cur.kinds(), cur.dims());
            kernels::parallel::apply_accumulate(kernels::compile(op, cur), cur.amps(), next.amps(), w);
        }
        cur = std::move(next);
    }
    return cur;
}

StateVector code_ground_state(const CodeSpec& spec, uint64_t cap) {
    const Lattice2D& lat = spec.lattice;
    uint64_t D = checked_pow(lat.group().order(), lat.site_count());
    if (D > cap) throw CapExceeded("ground state: dimension " + std::to_string(D) + " exceeds cap");
    StateVector ref = StateVector::basis(lat.kinds(), lat.dims(), std::vector<int>(lat.site_count(), 0));
    StateVector gs = project(all_plaquettes(spec), ref);
    gs.normalize();
    return gs;
}

// ---------------------------------------------------------------- logicals

ProductOperator vertical_x_group_string(const Lattice2D& lat, int x, const GroupElement& g, int row_from, int row_to) {
    if (x % 2 == 0) throw SpecError("vertical X_g strings run along an edge column (odd x)");
    if (row_to < 0) row_to = lat.rows() - 1;
    ProductOperator op;
    for (int r = row_from; r <= row_to; ++r) {
        if (r % 2 == 0) continue;
        op.times(lat.site_or_throw(r, x), shift_x(g));
    }
    return op;
}

ProductOperator vertical_x_dual_string(const Lattice2D& lat, int x, const DualCharacter& chi, int row_from,
                                       int row_to) {
    if (x % 2 != 0) throw SpecError("vertical X_chi strings run along a vertex column (even x)");
    if (row_to < 0) row_to = lat.rows() - 1;
    ProductOperator op;
    for (int r = row_from; r <= row_to; ++r) {
        if (r % 2 != 0) continue;
        op.times(lat.site_or_throw(r, x), shift_x_dual(chi));
    }
    return op;
}

ProductOperator horizontal_z_group_string(const Lattice2D& lat, int row, const GroupElement& g) {
    if (row % 2 != 0) throw SpecError("horizontal Z_g strings run along an even row");
    ProductOperator op;
    for (int x : lat.row_positions(row)) op.times(lat.site_or_throw(row, x), clock_z_dual(g));
    return op;
}

ProductOperator horizontal_z_dual_string(const Lattice2D& lat, int row, const DualCharacter& chi) {
    if (row % 2 == 0) throw SpecError("horizontal Z_chi strings run along an odd row");
    ProductOperator op;
    for (int x : lat.row_positions(row)) op.times(lat.site_or_throw(row, x), clock_z(chi));
    return op;
}

LogicalSet logical_operators(const CodeSpec& spec) {
    spec.validate();
    const Lattice2D& lat = spec.lattice;
    if (!lat.is_torus()) throw SpecError("logical operators are defined on the torus");
    const GroupSpec& G = lat.group();
    auto terms = build_bulk_stabilizers(spec);
    LogicalSet out;
    auto add = [&](Logical l) {
        for (const auto& t : terms) {
            auto c = commutation_phase(l.op, t.op);
            if (!c || !c->is_one()) {
                l.commutes = false;
                l.witness = t.label;
                l.witness_element = t.element;
                break;
            }
        }
        (l.commutes ? out.logicals : out.excluded).push_back(std::move(l));
    };
    for (int i = 0; i < G.rank(); ++i) {
        Exps e(G.rank(), 0);
        e[i] = 1;
        GroupElement g(G, e);
        DualCharacter chi(G, e);
        add({"Z_g horizontal row 0", "horizontal", g.str(), horizontal_z_group_string(lat, 0, g), true, std::nullopt, std::nullopt});
        add({"Z_chi horizontal row 1", "horizontal", chi.str(), horizontal_z_dual_string(lat, 1, chi), true, std::nullopt, std::nullopt});
        add({"X_chi vertical column 0", "vertical", chi.str(), vertical_x_dual_string(lat, 0, chi), true, std::nullopt, std::nullopt});
        add({"X_g vertical column 1", "vertical", g.str(), vertical_x_group_string(lat, 1, g), true, std::nullopt, std::nullopt});
    }
    return out;
}

}  // namespace gauge

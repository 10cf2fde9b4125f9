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


#include "gauge/tensor_network.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Phase root_of(const MonomialOperator& op, int b) { return Phase(op.phases()[b], op.modulus()); }

std::vector<int> unravel(size_t off, const std::vector<int>& shape) {
    std::vector<int> idx(shape.size());
    for (int k = static_cast<int>(shape.size()) - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(off % shape[k]);
        off /= shape[k];
    }
    return idx;
}

GaugeTensor m_tensor(const std::string& name, const GroupSpec& G, const std::function<MonomialOperator(int)>& u) {
    const int d = G.order();
    GaugeTensor t{name, G, {"left", "right", "out", "in"}, {true, false, true, false}, {d, d, d, d}, {}};
    t.entries.resize(static_cast<size_t>(ipow(d, 4)));
    for (int l = 0; l < d; ++l) {
        MonomialOperator op = u(l);
        for (int i = 0; i < d; ++i) t.entries[t.offset({l, l, op.perm()[i], i})] = {1, 1, root_of(op, i)};
    }
    return t;
}

// T(l, r, o) = <o| X~_r X_l |e> / |G|.
GaugeTensor t_tensor(const std::string& name, const GroupSpec& G, const std::function<MonomialOperator(int)>& x,
                     const std::function<MonomialOperator(int)>& x_tilde) {
    const int d = G.order();
    GaugeTensor t{name, G, {"left", "right", "out"}, {true, false, true}, {d, d, d}, {}};
    t.entries.resize(static_cast<size_t>(ipow(d, 3)));
    for (int l = 0; l < d; ++l)
        for (int r = 0; r < d; ++r) {
            MonomialOperator op = x_tilde(r) * x(l);
            t.entries[t.offset({l, r, op.perm()[0]})] = {1, d, root_of(op, 0)};
        }
    return t;
}

struct Relation {
    std::string name;
    std::string label;
    std::vector<LegOperator> ops;
    bool alternate = false;
};

IdentityCheck run_relation(const GaugeTensor& t, const Relation& rel) {
    GaugeTensor lhs = t;
    IdentityCheck c;
    c.tensor = t.name;
    c.relation = rel.name;
    c.label = rel.label;
    c.alternate_order = rel.alternate;
    for (const auto& lo : rel.ops) {
        lhs = apply_on_leg(lhs, t.leg(lo.leg), lo.op);
        c.legs.push_back(lo.leg);
    }
    c.exact = lhs == t;
    c.max_deviation = max_entry_deviation(lhs, t);
    return c;
}

// Relations on the G-labelled (edge) or G^-labelled (vertex) virtual and
// physical legs. `vertex_virtual`: the virtual legs carry C[G^].
std::vector<Relation> single_relations(TensorName name, const GroupSpec& G) {
    std::vector<Relation> out;
    auto els = elements(G);
    auto chars = characters(G);
    switch (name) {
        case TensorName::Te:
            for (const auto& chi : chars) {
                auto z = clock_z(chi);
                out.push_back({"Z_left Z^dag_right Z^dag_out", chi.str(),
                               {{"left", z}, {"right", z.adjoint()}, {"out", z.adjoint()}}});
            }
            for (const auto& g : els) {
                auto x = shift_x(g);
                out.push_back({"X_left X^dag_right", g.str(), {{"left", x}, {"right", x.adjoint()}}});
            }
            break;
        case TensorName::To:
            for (const auto& g : els) {
                auto z = clock_z_dual(g);
                out.push_back({"Z_left Z^dag_right Z^dag_out", g.str(),
                               {{"left", z}, {"right", z.adjoint()}, {"out", z.adjoint()}}});
            }
            for (const auto& chi : chars) {
                auto x = shift_x_dual(chi);
                out.push_back({"X_left X^dag_right", chi.str(), {{"left", x}, {"right", x.adjoint()}}});
            }
            break;
        case TensorName::MTilde:
        case TensorName::Me:
            for (const auto& g : els) {
                auto z = clock_z_dual(g);
                out.push_back({"Z_out Z^dag_in", g.str(), {{"out", z}, {"in", z.adjoint()}}});
                auto x = shift_x(g);
                out.push_back({"Z_in X_left X^dag_right", g.str(), {{"in", z}, {"left", x}, {"right", x.adjoint()}}});
            }
            break;
        case TensorName::Mo:
            for (const auto& chi : chars) {
                auto z = clock_z(chi);
                out.push_back({"Z_out Z^dag_in", chi.str(), {{"out", z}, {"in", z.adjoint()}}});
                auto x = shift_x_dual(chi);
                out.push_back({"Z_in X_left X^dag_right", chi.str(), {{"in", z}, {"left", x}, {"right", x.adjoint()}}});
            }
            break;
    }
    return out;
}

// even_upper: M_e over T_o (upper legs C[G], lower legs C[G^]).
std::vector<Relation> blocked_relations(bool even_upper, const GroupSpec& G) {
    std::vector<Relation> out;
    const size_t d = static_cast<size_t>(G.order());
    auto els = elements(G);
    auto chars = characters(G);
    for (size_t a = 0; a < d; ++a) {
        // The upper-leg label and its partner on the lower legs.
        MonomialOperator ux, lz, uz, lx;
        std::string lab, lab2;
        if (even_upper) {
            ux = shift_x(els[a]);
            lz = clock_z_dual(els[a]);
            uz = clock_z(chars[a]);
            lx = shift_x_dual(chars[a]);
            lab = els[a].str();
            lab2 = chars[a].str();
        } else {
            ux = shift_x_dual(chars[a]);
            lz = clock_z(chars[a]);
            uz = clock_z_dual(els[a]);
            lx = shift_x(els[a]);
            lab = chars[a].str();
            lab2 = els[a].str();
        }
        out.push_back({"X_ul X^dag_ur Z_ll Z^dag_lr",
                       lab,
                       {{"upper_left", ux}, {"upper_right", ux.adjoint()}, {"lower_left", lz}, {"lower_right", lz.adjoint()}}});
        out.push_back({"X_ul X^dag_ur Z^dag_ll Z_lr",
                       lab,
                       {{"upper_left", ux}, {"upper_right", ux.adjoint()}, {"lower_left", lz.adjoint()}, {"lower_right", lz}},
                       true});
        out.push_back({"Z^dag_ul Z_ur", lab2, {{"upper_left", uz.adjoint()}, {"upper_right", uz}}});
        out.push_back({"X^dag_ll X_lr", lab2, {{"lower_left", lx.adjoint()}, {"lower_right", lx}}});
    }
    return out;
}

struct Slot {
    bool is_m;
    int index;  // input site k for M, new-row site k for T
    int x;
};

}  // namespace

// ---------------------------------------------------------------- entries

cplx ExactEntry::value() const {
    if (num == 0) return 0.0;
    return static_cast<double>(num) / static_cast<double>(den) * phase.value();
}

ExactEntry ExactEntry::times(const ExactEntry& o) const {
    if (zero() || o.zero()) return {};
    int64_t n = num * o.num, dd = den * o.den;
    int64_t g = std::gcd(n, dd);
    return {n / g, dd / g, phase * o.phase};
}

bool ExactEntry::operator==(const ExactEntry& o) const {
    if (zero() || o.zero()) return zero() && o.zero();
    return num * o.den == o.num * den && phase == o.phase;
}

const char* tensor_name_str(TensorName n) {
    switch (n) {
        case TensorName::MTilde: return "M~";
        case TensorName::Me: return "M_e";
        case TensorName::Mo: return "M_o";
        case TensorName::Te: return "T_e";
        case TensorName::To: return "T_o";
    }
    return "?";
}

TensorName parse_tensor_name(const std::string& s) {
    for (TensorName n : {TensorName::MTilde, TensorName::Me, TensorName::Mo, TensorName::Te, TensorName::To})
        if (s == tensor_name_str(n)) return n;
    throw SpecError("unknown tensor '" + s + "'");
}

size_t GaugeTensor::offset(const std::vector<int>& idx) const {
    if (idx.size() != shape.size()) throw SpecError("tensor " + name + ": wrong index count");
    size_t off = 0;
    for (size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= shape[k]) throw SpecError("tensor " + name + ": index out of range");
        off = off * shape[k] + idx[k];
    }
    return off;
}

int GaugeTensor::leg(const std::string& n) const {
    for (size_t k = 0; k < legs.size(); ++k)
        if (legs[k] == n) return static_cast<int>(k);
    throw SpecError("tensor " + name + " has no leg '" + n + "'");
}

int64_t GaugeTensor::nonzero_count() const {
    return std::count_if(entries.begin(), entries.end(), [](const ExactEntry& e) { return !e.zero(); });
}

bool GaugeTensor::uniform_modulus() const {
    const ExactEntry* first = nullptr;
    for (const auto& e : entries) {
        if (e.zero()) continue;
        if (!first)
            first = &e;
        else if (e.num * first->den != first->num * e.den && e.num * first->den != -first->num * e.den)
            return false;
    }
    return true;
}

bool GaugeTensor::operator==(const GaugeTensor& o) const {
    return shape == o.shape && entries == o.entries;
}

GaugeTensor build_tensor(TensorName name, const GroupSpec& G, const std::optional<Cocycle>& twist) {
    if (twist && twist->group() != G) throw SpecError("build_tensor: twist on another group");
    const std::string nm = tensor_name_str(name);
    switch (name) {
        case TensorName::MTilde:
        case TensorName::Me:
            return m_tensor(nm, G, [&](int g) { return clock_z_dual(GroupElement::from_index(G, g)); });
        case TensorName::Mo:
            return m_tensor(nm, G, [&](int c) { return clock_z(DualCharacter::from_index(G, c)); });
        case TensorName::Te:
            return t_tensor(
                nm, G,
                [&](int g) {
                    auto e = GroupElement::from_index(G, g);
                    return twist ? projective_x(*twist, e) : shift_x(e);
                },
                [&](int g) {
                    auto e = GroupElement::from_index(G, g);
                    return twist ? projective_x_tilde(*twist, e) : shift_x(inverse(e));
                });
        case TensorName::To:
            return t_tensor(
                nm, G,
                [&](int c) {
                    auto chi = DualCharacter::from_index(G, c);
                    return twist ? projective_x_dual(*twist, chi) : shift_x_dual(chi);
                },
                [&](int c) {
                    auto chi = DualCharacter::from_index(G, c);
                    return twist ? projective_x_tilde_dual(*twist, chi) : shift_x_dual(inverse(chi));
                });
    }
    throw SpecError("build_tensor: unknown tensor");
}

GaugeTensor apply_on_leg(const GaugeTensor& t, int leg, const MonomialOperator& op) {
    if (leg < 0 || leg >= static_cast<int>(t.legs.size())) throw SpecError("apply_on_leg: bad leg");
    if (op.dim() != t.shape[leg]) throw SpecError("apply_on_leg: operator dimension does not match the leg");
    GaugeTensor out = t;
    std::fill(out.entries.begin(), out.entries.end(), ExactEntry{});
    for (size_t off = 0; off < t.entries.size(); ++off) {
        auto idx = unravel(off, t.shape);
        int b = idx[leg];
        if (t.ket[leg]) {
            // (op.T)[perm b] = w^ph[b] T[b]
            idx[leg] = op.perm()[b];
            out.entries[out.offset(idx)] = t.entries[off].times({1, 1, root_of(op, b)});
        } else {
            // (T.op)[a] = T[perm a] w^ph[a]; here off holds index a.
            idx[leg] = op.perm()[b];
            out.entries[off] = t.entries[t.offset(idx)].times({1, 1, root_of(op, b)});
        }
    }
    return out;
}

GaugeTensor blocked_tensor(const GaugeTensor& upper, const GaugeTensor& lower) {
    if (upper.legs.size() != 4 || lower.legs.size() != 3) throw SpecError("blocked_tensor: expects an M over a T");
    const int d = upper.shape[0];
    GaugeTensor b{upper.name + "/" + lower.name,
                  upper.group,
                  {"upper_left", "upper_right", "lower_left", "lower_right", "out"},
                  {true, false, true, false, true},
                  {d, d, d, d, d},
                  {}};
    b.entries.resize(static_cast<size_t>(ipow(d, 5)));
    for (size_t off = 0; off < b.entries.size(); ++off) {
        auto i = unravel(off, b.shape);
        ExactEntry acc;
        for (int m = 0; m < d; ++m) {
            ExactEntry e = upper.at({i[0], i[1], i[4], m}).times(lower.at({i[2], i[3], m}));
            if (e.zero()) continue;
            if (!acc.zero()) throw InternalConsistencyError("blocked_tensor: entry is not a single term");
            acc = e;
        }
        b.entries[off] = acc;
    }
    return b;
}

double max_entry_deviation(const GaugeTensor& a, const GaugeTensor& b) {
    if (a.shape != b.shape) throw SpecError("max_entry_deviation: shape mismatch");
    double m = 0;
    for (size_t k = 0; k < a.entries.size(); ++k) m = std::max(m, std::abs(a.entries[k].value() - b.entries[k].value()));
    return m;
}

// ---------------------------------------------------------------- pull-through

int64_t PullThroughReport::failures() const {
    return std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.alternate_order && !c.exact; });
}

int64_t PullThroughReport::alternate_failures() const {
    return std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.alternate_order && !c.exact; });
}

double PullThroughReport::max_deviation() const {
    double m = 0;
    for (const auto& c : checks)
        if (!c.alternate_order) m = std::max(m, c.max_deviation);
    return m;
}

PullThroughReport pull_through_check(const std::string& name, const GroupSpec& G) {
    PullThroughReport rep;
    rep.tensor = name;
    rep.group = G;
    auto add = [&](const GaugeTensor& t, const std::vector<Relation>& rels) {
        for (const auto& r : rels) rep.checks.push_back(run_relation(t, r));
    };
    auto single = [&](TensorName n) { add(build_tensor(n, G), single_relations(n, G)); };
    auto blocked = [&](bool even_upper) {
        GaugeTensor b = even_upper ? blocked_tensor(build_tensor(TensorName::Me, G), build_tensor(TensorName::To, G))
                                   : blocked_tensor(build_tensor(TensorName::Mo, G), build_tensor(TensorName::Te, G));
        add(b, blocked_relations(even_upper, G));
    };
    if (name == "all") {
        for (TensorName n : {TensorName::MTilde, TensorName::Te, TensorName::Mo, TensorName::To, TensorName::Me}) single(n);
        blocked(true);
        blocked(false);
    } else if (name == "M_e/T_o") {
        blocked(true);
    } else if (name == "M_o/T_e") {
        blocked(false);
    } else {
        single(parse_tensor_name(name));
    }
    return rep;
}

// ---------------------------------------------------------------- MPO layers

double mpo_normalization(const GroupSpec& G, const LayerSpec& layer) {
    GaugingMap map(G, layer, std::numeric_limits<uint64_t>::max());
    return map.normalization() * std::pow(static_cast<double>(G.order()), layer.output_size() - layer.n);
}

ExactMatrix contract_mpo_layer(const GroupSpec& G, const LayerSpec& layer, uint64_t cap) {
    GaugingMap map(G, layer, cap);  // validates and checks the cap on the output space
    const int d = G.order(), n = layer.n, n2 = layer.output_size();
    const bool pbc = layer.boundary == Boundary::Periodic;
    GaugeTensor M = build_tensor(layer.even() ? TensorName::Me : TensorName::Mo, G);
    GaugeTensor T = build_tensor(layer.even() ? TensorName::Te : TensorName::To, G, layer.twist);

    std::vector<Slot> chain;
    for (int k = 0; k < n; ++k) chain.push_back({true, k, map.input_x()[k]});
    for (int k = 0; k < n2; ++k) chain.push_back({false, k, map.output_x()[k]});
    std::sort(chain.begin(), chain.end(), [](const Slot& a, const Slot& b) { return a.x < b.x; });

    ExactMatrix m;
    const auto in_dims = map.input_dims();
    const auto out_dims = map.output_dims();
    m.cols = 1;
    for (int dd : in_dims) m.cols *= dd;
    m.rows = 1;
    for (int dd : out_dims) m.rows *= dd;
    m.modulus = G.phase_modulus();
    m.scale = std::pow(static_cast<double>(d), -n2);
    m.columns.resize(m.cols);
    const int64_t den_expected = ipow(d, n2);

    std::vector<int> in_digits(n), out_digits(n + n2);
    uint64_t col = 0;
    std::function<void(size_t, int, int, const ExactEntry&)> walk = [&](size_t s, int bond, int start,
                                                                        const ExactEntry& acc) {
        if (s == chain.size()) {
            if (bond != (pbc ? start : 0)) return;
            if (den_expected % acc.den != 0)
                throw InternalConsistencyError("mpo: non-uniform tensor scale");
            Int128 coeff = static_cast<Int128>(acc.num) * (den_expected / acc.den);
            uint64_t row = 0;
            for (int k = 0; k < n + n2; ++k) row = row * out_dims[k] + out_digits[k];
            auto [it, fresh] = m.columns[col].try_emplace(row, Cyclotomic(m.modulus));
            it->second.add_root(acc.phase.with_modulus(m.modulus).k(), coeff);
            return;
        }
        const Slot& sl = chain[s];
        for (int r = 0; r < d; ++r)
            for (int o = 0; o < d; ++o) {
                const ExactEntry& e = sl.is_m ? M.at({bond, r, o, in_digits[sl.index]}) : T.at({bond, r, o});
                if (e.zero()) continue;
                out_digits[sl.is_m ? sl.index : n + sl.index] = o;
                walk(s + 1, r, start, acc.times(e));
            }
    };
    for (col = 0; col < m.cols; ++col) {
        uint64_t c = col;
        for (int k = n - 1; k >= 0; --k) {
            in_digits[k] = static_cast<int>(c % in_dims[k]);
            c /= in_dims[k];
        }
        for (int start = 0; start < (pbc ? d : 1); ++start) walk(0, start, start, ExactEntry{1, 1, Phase(0, 1)});
        for (auto it = m.columns[col].begin(); it != m.columns[col].end();)
            it = it->second.is_zero() ? m.columns[col].erase(it) : std::next(it);
    }
    return m;
}

// ---------------------------------------------------------------- PEPES

std::vector<int> PEPESNetwork::row_sizes() const {
    std::vector<int> s;
    for (const auto& r : tensor_rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

PEPESNetwork assemble_pepes(const GroupSpec& G, const std::vector<LayerSpec>& layers, PepesGeometry geometry) {
    validate_layer_stack(G, layers);
    PEPESNetwork net;
    net.group = G;
    net.layers = layers;
    net.geometry = geometry;
    net.lattice = Lattice2D(G, layers[0].n, static_cast<int>(layers.size()), Boundary::Open, layers[0].boundary);
    for (const auto& l : layers) {
        const int j = l.index;
        std::vector<TensorSite> ms, ts;
        TensorName mn = j == 0 ? TensorName::MTilde : (l.even() ? TensorName::Me : TensorName::Mo);
        for (int x : net.lattice.row_positions(j)) ms.push_back({mn, j, x, net.lattice.site_or_throw(j, x)});
        for (int x : net.lattice.row_positions(j + 1))
            ts.push_back({l.even() ? TensorName::Te : TensorName::To, j + 1, x, net.lattice.site_or_throw(j + 1, x)});
        net.tensor_rows.push_back(ms);
        net.tensor_rows.push_back(ts);
        if (l.boundary == Boundary::Periodic)
            net.caps.push_back("trace");
        else
            net.caps.push_back(l.even() ? "<e| |e>" : "<e^| |e^>");
    }
    return net;
}

StateVector contract_pepes(const PEPESNetwork& net, const StateVector& input, uint64_t cap, bool parallel) {
    const GroupSpec& G = net.group;
    const int d = G.order();
    if (input.site_count() != net.layers[0].n) throw SpecError("contract_pepes: input must live on the layer-0 row");
    for (int s = 0; s < input.site_count(); ++s)
        if (input.kinds()[s] != SiteKind::VertexDual || input.dims()[s] != d)
            throw SpecError("contract_pepes: layer-0 sites are vertex sites of dimension |G|");
    {
        uint64_t total = 1;
        for (int s = 0; s < net.lattice.site_count(); ++s) {
            if (total > cap / d) throw CapExceeded("contract_pepes: dimension exceeds cap " + std::to_string(cap));
            total *= d;
        }
    }

    struct Layer {
        std::vector<std::vector<std::pair<uint64_t, cplx>>> cols;
        uint64_t rows;
    };
    auto sparse = [&](const LayerSpec& l) {
        ExactMatrix e = contract_mpo_layer(G, l, cap);
        double c = e.scale * mpo_normalization(G, l);
        Layer out{std::vector<std::vector<std::pair<uint64_t, cplx>>>(e.cols), e.rows};
        for (uint64_t b = 0; b < e.cols; ++b)
            for (const auto& [r, v] : e.columns[b]) out.cols[b].push_back({r, c * v.to_complex()});
        return out;
    };

    StateVector cur = input;
    std::vector<Layer> cache;
    for (const auto& l : net.layers) {
        Layer A = sparse(l);
        const uint64_t cols = A.cols.size(), rows = A.rows;
        const int64_t prefixes = static_cast<int64_t>(cur.size() / cols);
        std::vector<SiteKind> nk(l.output_size(), l.output_kind());
        StateVector next = cur.append_sites(nk, std::vector<int>(nk.size(), d), std::vector<int>(nk.size(), 0));
        std::fill(next.amps().begin(), next.amps().end(), cplx(0.0));
        const auto& in = cur.amps();
        auto& out = next.amps();
#pragma omp parallel for schedule(static) if (parallel)
        for (int64_t p = 0; p < prefixes; ++p)
            for (uint64_t b = 0; b < cols; ++b) {
                cplx a = in[p * cols + b];
                if (a == cplx(0.0)) continue;
                for (const auto& [r, v] : A.cols[b]) out[p * rows + r] += v * a;
            }
        cur = std::move(next);
        if (net.geometry == PepesGeometry::AdjointSquare) cache.push_back(std::move(A));
    }
    if (net.geometry == PepesGeometry::Layered) return cur;

    for (int j = static_cast<int>(net.layers.size()) - 1; j >= 0; --j) {
        const Layer& A = cache[j];
        const uint64_t cols = A.cols.size(), rows = A.rows;
        const int64_t prefixes = static_cast<int64_t>(cur.size() / rows);
        const int keep = cur.site_count() - net.layers[j].output_size();
        std::vector<SiteKind> kinds(cur.kinds().begin(), cur.kinds().begin() + keep);
        std::vector<int> dims(cur.dims().begin(), cur.dims().begin() + keep);
        StateVector next(kinds, dims);
        const auto& in = cur.amps();
        auto& out = next.amps();
#pragma omp parallel for schedule(static) if (parallel)
        for (int64_t p = 0; p < prefixes; ++p)
            for (uint64_t b = 0; b < cols; ++b) {
                cplx s = 0.0;
                for (const auto& [r, v] : A.cols[b]) s += std::conj(v) * in[p * rows + r];
                out[p * cols + b] = s;
            }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------- boundary remnants

std::vector<RemnantCheck> boundary_remnants(const ComposeResult& composed) {
    const Lattice2D& lat = composed.lattice;
    if (lat.horizontal() != Boundary::Open) throw SpecError("boundary_remnants: needs a horizontally open lattice");
    const GroupSpec& G = lat.group();
    CodeSpec spec = CodeSpec::untwisted(lat);
    auto terms = terms_of(all_plaquettes(spec));
    std::vector<RemnantCheck> out;
    for (int j = 0; j + 2 < lat.rows(); ++j) {
        for (bool left : {true, false}) {
            const auto& r1 = lat.row_positions(j + 1);
            const auto& r2 = lat.row_positions(j + 2);
            int s1 = lat.site_or_throw(j + 1, left ? r1.front() : r1.back());
            int s2 = lat.site_or_throw(j + 2, left ? r2.front() : r2.back());
            for (int a = 1; a < G.order(); ++a) {
                ProductOperator op;
                if (j % 2 == 0) {
                    auto g = GroupElement::from_index(G, a);
                    op.times(s1, left ? shift_x(g) : shift_x(inverse(g)));
                    op.times(s2, clock_z_dual(g).adjoint());
                } else {
                    auto chi = DualCharacter::from_index(G, a);
                    op.times(s1, left ? shift_x_dual(chi) : shift_x_dual(inverse(chi)));
                    op.times(s2, clock_z(chi).adjoint());
                }
                RemnantCheck c{j, left, a, op, expectation(op, composed.state), false};
                for (const auto& t : terms)
                    if (t.op == op) c.in_stabilizer_set = true;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- JSON

std::string tensor_json(const GaugeTensor& t, int indent) {
    nlohmann::ordered_json j;
    j["name"] = t.name;
    j["group"] = t.group.orders();
    j["legs"] = t.legs;
    j["shape"] = t.shape;
    auto& e = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& x : t.entries) {
        Phase p = x.zero() ? Phase(0, 1) : x.phase;
        e.push_back({{"num", x.num}, {"den", x.zero() ? 1 : x.den}, {"phase_k", p.k()}, {"phase_L", p.modulus()}});
    }
    return j.dump(indent);
}

}  // namespace gauge

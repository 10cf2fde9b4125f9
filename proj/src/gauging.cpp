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


#include "gauge/gauging.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <set>

#include "gauge/errors.hpp"
#include "gauge/kernels.hpp"

namespace gauge {

namespace {

uint64_t checked_pow(uint64_t base, int exp, uint64_t cap, const char* what) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) throw CapExceeded(std::string(what) + ": dimension exceeds cap " + std::to_string(cap));
        r *= base;
    }
    return r;
}

struct TermFactors {
    MonomialOperator left, mid, right;
};

// X~_a (x) Z_a (x) X_a for element a of the input-row group.
TermFactors term_factors(const GroupSpec& G, const LayerSpec& layer, int a) {
    if (layer.even()) {
        GroupElement g = GroupElement::from_index(G, a);
        if (layer.twist) return {projective_x_tilde(*layer.twist, g), clock_z_dual(g), projective_x(*layer.twist, g)};
        return {shift_x(inverse(g)), clock_z_dual(g), shift_x(g)};
    }
    DualCharacter chi = DualCharacter::from_index(G, a);
    if (layer.twist)
        return {projective_x_tilde_dual(*layer.twist, chi), clock_z(chi), projective_x_dual(*layer.twist, chi)};
    return {shift_x_dual(inverse(chi)), clock_z(chi), shift_x_dual(chi)};
}

ProductOperator shifted(const ProductOperator& op, int offset) {
    ProductOperator out;
    for (const auto& [s, m] : op.factors()) out.times(s + offset, m);
    return out;
}

// cur <- prod over terms groups (1/|G| sum_a T(a)) cur, first group first.
void apply_projectors(StateVector& cur, const std::vector<std::vector<ProductOperator>>& terms, int offset) {
    for (const auto& group_terms : terms) {
        StateVector next(cur.kinds(), cur.dims());
        cplx w = 1.0 / static_cast<double>(group_terms.size());
        for (const auto& t : group_terms) {
            ProductOperator op = offset ? shifted(t, offset) : t;
            check_support(op, cur.kinds(), cur.dims());
            kernels::parallel::apply_accumulate(kernels::compile(op, cur), cur.amps(), next.amps(), w);
        }
        cur = std::move(next);
    }
}

std::vector<int> digits_of(uint64_t idx, const std::vector<int>& dims) {
    std::vector<int> d(dims.size());
    for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
        d[s] = static_cast<int>(idx % dims[s]);
        idx /= dims[s];
    }
    return d;
}

uint64_t index_of(const std::vector<int>& d, const std::vector<int>& dims) {
    uint64_t idx = 0;
    for (size_t s = 0; s < dims.size(); ++s) idx = idx * dims[s] + d[s];
    return idx;
}

void check_layers(const GroupSpec& G, const std::vector<LayerSpec>& layers) {
    if (layers.empty()) throw SpecError("compose: need at least one layer");
    for (size_t j = 0; j < layers.size(); ++j) {
        const LayerSpec& l = layers[j];
        l.validate(G);
        if (l.index != static_cast<int>(j)) throw SpecError("compose: layer " + std::to_string(j) + " has index " +
                                                            std::to_string(l.index));
        if (l.boundary != layers[0].boundary) throw SpecError("compose: mixed boundary conditions");
        if (j > 0 && l.n != layers[j - 1].output_size())
            throw SpecError("compose: layer " + std::to_string(j) + " input size does not match the previous output");
    }
}

}  // namespace

// ---------------------------------------------------------------- LayerSpec

void validate_layer_stack(const GroupSpec& group, const std::vector<LayerSpec>& layers) { check_layers(group, layers); }

void LayerSpec::validate(const GroupSpec& g) const {
    if (index < 0) throw SpecError("layer index must be >= 0");
    if (n < 2) throw SpecError("layer needs N >= 2");
    if (twist && twist->group() != g) throw SpecError("layer twist is defined on another group");
}

std::vector<LayerSpec> make_layers(int n, int m, Boundary bc, const std::optional<Cocycle>& even_twist,
                                   const std::optional<Cocycle>& odd_twist) {
    if (m < 1) throw SpecError("need at least one layer");
    std::vector<LayerSpec> out;
    for (int j = 0; j < m; ++j) {
        LayerSpec l;
        l.index = j;
        l.n = bc == Boundary::Periodic ? n : n + j;
        l.boundary = bc;
        l.twist = j % 2 == 0 ? even_twist : odd_twist;
        out.push_back(l);
    }
    return out;
}

// ---------------------------------------------------------------- ExactMatrix

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows != o.rows || cols != o.cols || modulus != o.modulus || scale != o.scale) return false;
    for (uint64_t c = 0; c < cols; ++c) {
        std::set<uint64_t> keys;
        for (const auto& [r, v] : columns[c]) keys.insert(r);
        for (const auto& [r, v] : o.columns[c]) keys.insert(r);
        for (uint64_t r : keys) {
            Cyclotomic d(modulus);
            if (auto it = columns[c].find(r); it != columns[c].end()) d += it->second;
            if (auto it = o.columns[c].find(r); it != o.columns[c].end()) d -= it->second;
            if (!d.is_zero()) return false;
        }
    }
    return true;
}

ExactMatrix ExactMatrix::left_multiply(const ProductOperator& op, const std::vector<int>& row_dims) const {
    ExactMatrix out = *this;
    for (auto& col : out.columns) {
        std::map<uint64_t, Cyclotomic> next;
        for (const auto& [r, v] : col) {
            auto d = digits_of(r, row_dims);
            int ph = basis_action(op, d, modulus);
            auto [it, fresh] = next.try_emplace(index_of(d, row_dims), Cyclotomic(modulus));
            it->second += v.times_root(ph);
        }
        col = std::move(next);
    }
    return out;
}

ExactMatrix ExactMatrix::right_multiply(const ProductOperator& op, const std::vector<int>& col_dims) const {
    ExactMatrix out = *this;
    for (uint64_t c = 0; c < cols; ++c) {
        auto d = digits_of(c, col_dims);
        int ph = basis_action(op, d, modulus);
        const auto& src = columns[index_of(d, col_dims)];
        std::map<uint64_t, Cyclotomic> col;
        for (const auto& [r, v] : src) col.emplace(r, v.times_root(ph));
        out.columns[c] = std::move(col);
    }
    return out;
}

std::vector<cplx> ExactMatrix::dense() const {
    std::vector<cplx> m(rows * cols);
    for (uint64_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[c]) m[r * cols + c] = scale * v.to_complex();
    return m;
}

// ---------------------------------------------------------------- GaugingMap

bool equal_entries(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (uint64_t c = 0; c < a.cols; ++c) {
        auto ia = a.columns[c].begin(), ib = b.columns[c].begin();
        while (true) {
            while (ia != a.columns[c].end() && ia->second.is_zero()) ++ia;
            while (ib != b.columns[c].end() && ib->second.is_zero()) ++ib;
            bool ea = ia == a.columns[c].end(), eb = ib == b.columns[c].end();
            if (ea || eb) {
                if (ea != eb) return false;
                break;
            }
            if (ia->first != ib->first || ia->second != ib->second) return false;
            ++ia;
            ++ib;
        }
    }
    return true;
}

GaugingMap::GaugingMap(GroupSpec group, LayerSpec layer, uint64_t cap)
    : group_(std::move(group)), layer_(std::move(layer)), cap_(cap) {
    layer_.validate(group_);
    const int d = group_.order();
    checked_pow(d, output_sites(), cap_, "gauging map");
    const int j = layer_.index, n = layer_.n, n2 = layer_.output_size();
    const bool pbc = layer_.boundary == Boundary::Periodic;
    for (int k = 0; k < n; ++k) in_x_.push_back(pbc ? j % 2 + 2 * k : -j + 2 * k);
    for (int k = 0; k < n2; ++k) out_x_.push_back(pbc ? (j + 1) % 2 + 2 * k : -j - 1 + 2 * k);
    auto out_site = [&](int x) {
        if (pbc) x = ((x % (2 * n)) + 2 * n) % (2 * n);
        for (int k = 0; k < n2; ++k)
            if (out_x_[k] == x) return n + k;
        throw InternalConsistencyError("gauging map: missing neighbour");
    };
    terms_.resize(n);
    for (int i = 0; i < n; ++i) {
        int l = out_site(in_x_[i] - 1), r = out_site(in_x_[i] + 1);
        for (int a = 0; a < d; ++a) {
            TermFactors f = term_factors(group_, layer_, a);
            ProductOperator op;
            op.times(l, f.left);
            op.times(i, f.mid);
            op.times(r, f.right);
            terms_[i].push_back(op);
        }
    }
    norm_ = std::pow(static_cast<double>(d), pbc ? (n - 1) / 2.0 : n / 2.0);
}

std::vector<SiteKind> GaugingMap::input_kinds() const { return std::vector<SiteKind>(layer_.n, layer_.input_kind()); }

std::vector<SiteKind> GaugingMap::output_kinds() const {
    auto k = input_kinds();
    k.insert(k.end(), layer_.output_size(), layer_.output_kind());
    return k;
}

std::vector<int> GaugingMap::input_dims() const { return std::vector<int>(input_sites(), group_.order()); }
std::vector<int> GaugingMap::output_dims() const { return std::vector<int>(output_sites(), group_.order()); }

StateVector GaugingMap::apply(const StateVector& in) const {
    if (in.kinds() != input_kinds() || in.dims() != input_dims())
        throw SpecError("gauging map: input does not match the layer's row");
    std::vector<SiteKind> nk(layer_.output_size(), layer_.output_kind());
    StateVector cur = in.append_sites(nk, std::vector<int>(nk.size(), group_.order()), std::vector<int>(nk.size(), 0));
    apply_projectors(cur, terms_, 0);
    for (auto& a : cur.amps()) a *= norm_;
    return cur;
}

ExactMatrix GaugingMap::exact_matrix() const {
    const int d = group_.order(), n = layer_.n;
    ExactMatrix m;
    m.cols = checked_pow(d, n, cap_, "exact gauging matrix");
    m.rows = checked_pow(d, output_sites(), cap_, "exact gauging matrix");
    checked_pow(d, 2 * n, cap_, "exact gauging matrix");
    m.modulus = group_.phase_modulus();
    m.scale = norm_ / std::pow(static_cast<double>(d), n);
    m.columns.resize(m.cols);
    auto dims = output_dims();
    for (uint64_t b = 0; b < m.cols; ++b) {
        std::vector<int> base(output_sites(), 0);
        auto bd = digits_of(b, input_dims());
        std::copy(bd.begin(), bd.end(), base.begin());
        std::vector<int> choice(n, 0);
        while (true) {
            auto dg = base;
            int64_t ph = 0;
            for (int i = 0; i < n; ++i) ph += basis_action(terms_[i][choice[i]], dg, m.modulus);
            auto [it, fresh] = m.columns[b].try_emplace(index_of(dg, dims), Cyclotomic(m.modulus));
            it->second.add_root(ph % m.modulus);
            int k = n - 1;
            while (k >= 0 && ++choice[k] == d) choice[k--] = 0;
            if (k < 0) break;
        }
    }
    return m;
}

ProductOperator GaugingMap::emergent_symmetry(int a) const {
    ProductOperator w;
    for (int k = 0; k < layer_.output_size(); ++k) {
        int s = layer_.n + k;
        if (layer_.even())
            w.times(s, clock_z(DualCharacter::from_index(group_, a)));
        else
            w.times(s, clock_z_dual(GroupElement::from_index(group_, a)));
    }
    return w;
}

// ---------------------------------------------------------------- composition

ComposeResult compose_gauging(const GroupSpec& group, const std::vector<LayerSpec>& layers, const StateVector& input,
                              uint64_t cap) {
    check_layers(group, layers);
    const int n0 = layers[0].n;
    if (input.site_count() != n0) throw SpecError("compose: input must live on the layer-0 row");
    for (int s = 0; s < n0; ++s)
        if (input.kinds()[s] != SiteKind::VertexDual || input.dims()[s] != group.order())
            throw SpecError("compose: layer-0 sites are vertex sites of dimension |G|");
    ComposeResult res;
    res.lattice = Lattice2D(group, n0, static_cast<int>(layers.size()), Boundary::Open, layers[0].boundary);
    checked_pow(group.order(), res.lattice.site_count(), cap, "compose");
    StateVector cur = input;
    int offset = 0;
    for (const auto& l : layers) {
        GaugingMap map(group, l, cap);
        std::vector<SiteKind> nk(l.output_size(), l.output_kind());
        cur = cur.append_sites(nk, std::vector<int>(nk.size(), group.order()), std::vector<int>(nk.size(), 0));
        std::vector<std::vector<ProductOperator>> terms;
        for (int i = 0; i < l.n; ++i) terms.push_back(map.terms(i));
        apply_projectors(cur, terms, offset);
        for (auto& a : cur.amps()) a *= map.normalization();
        res.layer_norms.push_back(cur.norm());
        offset += l.n;
    }
    if (cur.kinds() != res.lattice.kinds()) throw InternalConsistencyError("compose: site layout mismatch");
    res.state = std::move(cur);
    return res;
}

StateVector stacked_projector_state(const GroupSpec& group, const std::vector<LayerSpec>& layers,
                                    const StateVector& input, uint64_t cap) {
    check_layers(group, layers);
    Lattice2D lat(group, layers[0].n, static_cast<int>(layers.size()), Boundary::Open, layers[0].boundary);
    checked_pow(group.order(), lat.site_count(), cap, "stacked projector");
    if (input.site_count() != layers[0].n) throw SpecError("stacked projector: input must live on the layer-0 row");
    int rest = lat.site_count() - input.site_count();
    auto all = lat.kinds();
    std::vector<SiteKind> kinds(all.begin() + input.site_count(), all.end());
    StateVector cur = input.append_sites(kinds, std::vector<int>(rest, group.order()), std::vector<int>(rest, 0));
    int offset = 0;
    for (const auto& l : layers) {
        GaugingMap map(group, l, cap);
        std::vector<std::vector<ProductOperator>> terms;
        for (int i = 0; i < l.n; ++i) terms.push_back(map.terms(i));
        apply_projectors(cur, terms, offset);
        offset += l.n;
    }
    cur.normalize();
    return cur;
}

ProductOperator local_symmetry_operator(const Lattice2D& lat, const std::vector<LayerSpec>& layers, int j, int x,
                                        int a) {
    const LayerSpec& l = layers.at(j);
    TermFactors f = term_factors(lat.group(), l, a);
    ProductOperator op;
    op.times(lat.site_or_throw(j + 1, x - 1), f.left);
    op.times(lat.site_or_throw(j, x), f.mid);
    op.times(lat.site_or_throw(j + 1, x + 1), f.right);
    if (j + 1 < static_cast<int>(layers.size())) op.times(lat.site_or_throw(j + 2, x), f.mid.adjoint());
    return op;
}

VerifyReport verify_local_symmetry(const ComposeResult& out, const std::vector<LayerSpec>& layers, double tol) {
    VerifyReport rep;
    const Lattice2D& lat = out.lattice;
    double nn = out.state.norm();
    nn *= nn;
    for (int j = 0; j < static_cast<int>(layers.size()); ++j) {
        for (int x : lat.row_positions(j)) {
            for (int a = 0; a < lat.group().order(); ++a) {
                ProductOperator op = local_symmetry_operator(lat, layers, j, x, a);
                double dev = std::abs(expectation(op, out.state) / nn - 1.0);
                ++rep.checked;
                rep.max_deviation = std::max(rep.max_deviation, dev);
                if (!(dev <= tol))
                    rep.failures.push_back("layer " + std::to_string(j) + " x " + std::to_string(x) + " element " +
                                           std::to_string(a));
            }
        }
    }
    return rep;
}

EmergentReport verify_emergent_symmetry(const GaugingMap& map) {
    EmergentReport rep;
    ExactMatrix m = map.exact_matrix();
    auto dims = map.output_dims();
    for (int a = 0; a < map.group().order(); ++a) {
        ProductOperator w = map.emergent_symmetry(a);
        ++rep.matrix.checked;
        if (m.left_multiply(w, dims) != m) rep.matrix.failures.push_back("element " + std::to_string(a));
        bool ok = true;
        for (int i = 0; i < map.input_sites(); ++i)
            for (const auto& t : map.terms(i)) {
                auto ph = commutation_phase(w, t);
                ++rep.operators.checked;
                if (!ph || !ph->is_one()) ok = false;
            }
        std::vector<int> zero(map.output_sites(), 0);
        auto dg = zero;
        if (basis_action(w, dg, map.group().phase_modulus()) != 0 || dg != zero) ok = false;
        if (!ok) rep.operators.failures.push_back("element " + std::to_string(a));
    }
    return rep;
}

ProductOperator string_order_image(const GaugingMap& map, int i, int i2, int a) {
    const LayerSpec& l = map.layer();
    if (!(0 <= i && i < i2 && i2 < l.n)) throw SpecError("string order: need 0 <= i < i' < N");
    const GroupSpec& G = map.group();
    ProductOperator op;
    MonomialOperator x = l.even() ? shift_x_dual(DualCharacter::from_index(G, a)) : shift_x(GroupElement::from_index(G, a));
    op.times(i, x);
    op.times(i2, x.adjoint());
    for (int k = 0; k < l.output_size(); ++k) {
        int xo = map.output_x()[k];
        if (xo <= map.input_x()[i] || xo >= map.input_x()[i2]) continue;
        op.times(l.n + k,
                 l.even() ? clock_z(DualCharacter::from_index(G, a)) : clock_z_dual(GroupElement::from_index(G, a)));
    }
    return op;
}

VerifyReport verify_string_order_mapping(const GroupSpec& group, const LayerSpec& layer, int i, int i2, int a) {
    GaugingMap map(group, layer);
    ExactMatrix m = map.exact_matrix();
    ProductOperator image = string_order_image(map, i, i2, a);
    ProductOperator in;
    for (const auto& [s, f] : image.factors())
        if (s < layer.n) in.times(s, f);
    VerifyReport rep;
    rep.checked = 1;
    ExactMatrix lhs = m.right_multiply(in, map.input_dims());
    ExactMatrix rhs = m.left_multiply(image, map.output_dims());
    if (lhs != rhs) {
        auto dl = lhs.dense(), dr = rhs.dense();
        for (size_t k = 0; k < dl.size(); ++k) rep.max_deviation = std::max(rep.max_deviation, std::abs(dl[k] - dr[k]));
        rep.failures.push_back("sites " + std::to_string(i) + "," + std::to_string(i2) + " element " +
                               std::to_string(a));
    }
    return rep;
}

// ---------------------------------------------------------------- 0D gauging

StateVector zero_dim_gauge(const GroupSpec& group, const StateVector& psi, int iterations) {
    if (psi.site_count() != 1 || psi.dims()[0] != group.order())
        throw SpecError("zero_dim_gauge: input is a single site of dimension |G|");
    if (iterations < 0) throw SpecError("zero_dim_gauge: iterations must be >= 0");
    const int d = group.order();
    const bool vertex = psi.kinds()[0] == SiteKind::VertexDual;
    auto u = [&](int g) {
        GroupElement e = GroupElement::from_index(group, g);
        return vertex ? clock_z_dual(e) : shift_x(e);
    };
    double nn = psi.norm();
    nn *= nn;
    if (nn == 0) throw SpecError("zero_dim_gauge: zero state");
    for (int g = 0; g < d; ++g)
        if (std::abs(expectation(ProductOperator(0, u(g)), psi) / nn - 1.0) > 1e-10)
            throw SpecError("zero_dim_gauge: input is not symmetric under u_g");
    // Internal order: psi, -1, 1, -2, 2, ...
    StateVector cur = psi;
    for (int k = 1; k <= iterations; ++k) {
        cur = cur.append_sites({SiteKind::EdgeGroup, SiteKind::EdgeGroup}, {d, d}, {0, 0});
        int left = 2 * k - 1, right = 2 * k;
        std::vector<ProductOperator> terms;
        for (int g = 0; g < d; ++g) {
            GroupElement e = GroupElement::from_index(group, g);
            ProductOperator op;
            op.times(left, shift_x(inverse(e)));
            op.times(0, u(g));
            op.times(right, shift_x(e));
            terms.push_back(op);
        }
        apply_projectors(cur, {terms}, 0);
        for (auto& a : cur.amps()) a *= std::sqrt(static_cast<double>(d));
    }
    std::vector<int> order;
    for (int p = -iterations; p <= iterations; ++p) order.push_back(p == 0 ? 0 : p < 0 ? -2 * p - 1 : 2 * p);
    return reorder_sites(cur, order);
}

double entanglement_entropy(const StateVector& psi, int cut) {
    if (cut < 0 || cut > psi.site_count()) throw SpecError("entropy: cut out of range");
    size_t dl = 1;
    for (int s = 0; s < cut; ++s) dl *= psi.dims()[s];
    size_t dr = psi.size() / dl;
    Eigen::MatrixXcd m(dl, dr);
    for (size_t i = 0; i < dl; ++i)
        for (size_t j = 0; j < dr; ++j) m(i, j) = psi[i * dr + j];
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    double total = sv.squaredNorm();
    if (total == 0) throw SpecError("entropy: zero state");
    double s = 0;
    for (int k = 0; k < sv.size(); ++k) {
        double p = sv(k) * sv(k) / total;
        if (p > 1e-300) s -= p * std::log(p);
    }
    return s;
}

}  // namespace gauge

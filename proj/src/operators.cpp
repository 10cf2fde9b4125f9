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

#include <cmath>
#include <numbers>

#include "gauge/errors.hpp"
#include "gauge/kernels.hpp"

namespace gauge {

namespace {

int mod(int64_t a, int64_t m) {
    a %= m;
    return static_cast<int>(a < 0 ? a + m : a);
}

std::optional<SiteKind> merge_kind(std::optional<SiteKind> a, std::optional<SiteKind> b) {
    if (a && b && *a != *b) throw SpecError("operator site kinds differ");
    return a ? a : b;
}

}  // namespace

const char* site_kind_name(SiteKind k) { return k == SiteKind::VertexDual ? "VertexDual" : "EdgeGroup"; }

// ---------------------------------------------------------------- MonomialOperator

MonomialOperator MonomialOperator::identity(int dim, int L, std::optional<SiteKind> kind) {
    std::vector<int> perm(dim);
    for (int i = 0; i < dim; ++i) perm[i] = i;
    return MonomialOperator(perm, std::vector<int>(dim, 0), L, kind);
}

MonomialOperator::MonomialOperator(std::vector<int> perm, std::vector<int> phase, int L, std::optional<SiteKind> kind)
    : perm_(std::move(perm)), phase_(std::move(phase)), L_(L), kind_(kind) {
    if (L_ < 1) throw SpecError("phase modulus must be positive");
    if (perm_.size() != phase_.size()) throw SpecError("monomial: perm/phase length mismatch");
    std::vector<char> hit(perm_.size(), 0);
    for (int p : perm_) {
        if (p < 0 || p >= dim() || hit[p]) throw SpecError("monomial: perm is not a bijection");
        hit[p] = 1;
    }
    for (auto& k : phase_) k = mod(k, L_);
}

MonomialOperator MonomialOperator::operator*(const MonomialOperator& b) const {
    if (dim() != b.dim()) throw SpecError("monomial multiply: dimension mismatch");
    if (L_ != b.L_) throw SpecError("monomial multiply: phase modulus mismatch");
    int d = dim();
    std::vector<int> perm(d), phase(d);
    for (int x = 0; x < d; ++x) {
        int y = b.perm_[x];
        perm[x] = perm_[y];
        phase[x] = b.phase_[x] + phase_[y];
    }
    return MonomialOperator(std::move(perm), std::move(phase), L_, merge_kind(kind_, b.kind_));
}

MonomialOperator MonomialOperator::adjoint() const {
    int d = dim();
    std::vector<int> perm(d), phase(d);
    for (int x = 0; x < d; ++x) {
        perm[perm_[x]] = x;
        phase[perm_[x]] = -phase_[x];
    }
    return MonomialOperator(std::move(perm), std::move(phase), L_, kind_);
}

MonomialOperator MonomialOperator::pow(int e) const {
    MonomialOperator base = e < 0 ? adjoint() : *this;
    MonomialOperator r = identity(dim(), L_, kind_);
    for (int i = 0; i < std::abs(e); ++i) r = base * r;
    return r;
}

bool MonomialOperator::is_identity() const {
    for (int x = 0; x < dim(); ++x) {
        if (perm_[x] != x || phase_[x] != 0) return false;
    }
    return true;
}

std::optional<Phase> MonomialOperator::scalar() const {
    for (int x = 0; x < dim(); ++x) {
        if (perm_[x] != x || phase_[x] != phase_[0]) return std::nullopt;
    }
    return Phase(dim() ? phase_[0] : 0, L_);
}

Cyclotomic MonomialOperator::trace() const {
    Cyclotomic t(L_);
    for (int x = 0; x < dim(); ++x) {
        if (perm_[x] == x) t.add_root(phase_[x]);
    }
    return t;
}

bool MonomialOperator::operator==(const MonomialOperator& o) const {
    if (dim() != o.dim()) return false;
    if (L_ == o.L_) return perm_ == o.perm_ && phase_ == o.phase_;
    for (int x = 0; x < dim(); ++x) {
        if (perm_[x] != o.perm_[x]) return false;
        if (Phase(phase_[x], L_) != Phase(o.phase_[x], o.L_)) return false;
    }
    return true;
}

std::vector<cplx> MonomialOperator::dense() const {
    int d = dim();
    std::vector<cplx> m(static_cast<size_t>(d) * d, 0.0);
    for (int x = 0; x < d; ++x) m[static_cast<size_t>(perm_[x]) * d + x] = Phase(phase_[x], L_).value();
    return m;
}

// ---------------------------------------------------------------- factories

namespace {

MonomialOperator translation(const GroupSpec& G, int t, std::optional<SiteKind> kind) {
    std::vector<int> perm(G.order());
    for (int h = 0; h < G.order(); ++h) perm[h] = G.mul_index(t, h);
    return MonomialOperator(perm, std::vector<int>(G.order(), 0), G.phase_modulus(), kind);
}

// diag(chi(h)) with chi given by index, basis labelled by elements.
MonomialOperator diagonal(const GroupSpec& G, int chi, std::optional<SiteKind> kind) {
    std::vector<int> perm(G.order()), phase(G.order());
    for (int h = 0; h < G.order(); ++h) {
        perm[h] = h;
        phase[h] = G.pair_index(chi, h);
    }
    return MonomialOperator(perm, phase, G.phase_modulus(), kind);
}

MonomialOperator px(const Cocycle& alpha, int g, SiteKind kind) {
    const GroupSpec& G = alpha.group();
    std::vector<int> perm(G.order()), phase(G.order());
    for (int h = 0; h < G.order(); ++h) {
        perm[h] = G.mul_index(g, h);
        phase[h] = alpha.exponent(g, h);
    }
    return MonomialOperator(perm, phase, G.phase_modulus(), kind);
}

MonomialOperator px_tilde(const Cocycle& alpha, int g, SiteKind kind) {
    const GroupSpec& G = alpha.group();
    int ginv = G.inv_index(g);
    std::vector<int> perm(G.order()), phase(G.order());
    for (int h = 0; h < G.order(); ++h) {
        int hg = G.mul_index(h, ginv);
        perm[h] = hg;
        phase[h] = -alpha.exponent(hg, g);
    }
    return MonomialOperator(perm, phase, G.phase_modulus(), kind);
}

}  // namespace

MonomialOperator shift_x(const GroupElement& g) { return translation(g.group(), g.index(), SiteKind::EdgeGroup); }

MonomialOperator clock_z(const DualCharacter& chi) { return diagonal(chi.group(), chi.index(), SiteKind::EdgeGroup); }

MonomialOperator shift_x_dual(const DualCharacter& chi) {
    return translation(chi.group(), chi.index(), SiteKind::VertexDual);
}

MonomialOperator clock_z_dual(const GroupElement& g) {
    // psi(g) with psi the basis character: the pairing is symmetric in indices.
    return diagonal(g.group(), g.index(), SiteKind::VertexDual);
}

MonomialOperator projective_x(const Cocycle& alpha, const GroupElement& g) {
    if (g.group() != alpha.group()) throw SpecError("projective_x: element from another group");
    return px(alpha, g.index(), SiteKind::EdgeGroup);
}

MonomialOperator projective_x_tilde(const Cocycle& alpha, const GroupElement& g) {
    if (g.group() != alpha.group()) throw SpecError("projective_x_tilde: element from another group");
    return px_tilde(alpha, g.index(), SiteKind::EdgeGroup);
}

MonomialOperator projective_x_dual(const Cocycle& gamma, const DualCharacter& chi) {
    if (chi.group() != gamma.group()) throw SpecError("projective_x_dual: character from another group");
    return px(gamma, chi.index(), SiteKind::VertexDual);
}

MonomialOperator projective_x_tilde_dual(const Cocycle& gamma, const DualCharacter& chi) {
    if (chi.group() != gamma.group()) throw SpecError("projective_x_tilde_dual: character from another group");
    return px_tilde(gamma, chi.index(), SiteKind::VertexDual);
}

// ---------------------------------------------------------------- ProductOperator

ProductOperator::ProductOperator(int site, MonomialOperator op) { times(site, op); }

ProductOperator& ProductOperator::times(int site, const MonomialOperator& op) {
    auto it = factors_.find(site);
    if (it == factors_.end()) {
        if (!op.is_identity() || op.kind()) factors_.emplace(site, op);
    } else {
        it->second = op * it->second;
    }
    return *this;
}

ProductOperator ProductOperator::operator*(const ProductOperator& b) const {
    ProductOperator r = b;
    for (const auto& [site, op] : factors_) r.times(site, op);
    return r;
}

ProductOperator ProductOperator::adjoint() const {
    ProductOperator r;
    for (const auto& [site, op] : factors_) r.factors_.emplace(site, op.adjoint());
    return r;
}

std::vector<int> ProductOperator::support() const {
    std::vector<int> s;
    for (const auto& [site, op] : factors_) {
        if (!op.is_identity()) s.push_back(site);
    }
    return s;
}

std::optional<Phase> ProductOperator::scalar() const {
    Phase total;
    for (const auto& [site, op] : factors_) {
        auto s = op.scalar();
        if (!s) return std::nullopt;
        total *= *s;
    }
    return total;
}

bool ProductOperator::is_identity() const {
    auto s = scalar();
    return s && s->is_one();
}

bool ProductOperator::operator==(const ProductOperator& o) const {
    auto q = (*this) * o.adjoint();
    return q.is_identity();
}

std::optional<Phase> commutation_phase(const ProductOperator& a, const ProductOperator& b) {
    // Only overlapping sites contribute.
    Phase total;
    for (const auto& [site, op] : a.factors()) {
        auto it = b.factors().find(site);
        if (it == b.factors().end()) continue;
        auto c = commutation_phase(op, it->second);
        if (!c) return std::nullopt;
        total *= *c;
    }
    return total;
}

std::optional<Phase> commutation_phase(const MonomialOperator& a, const MonomialOperator& b) {
    return (a * b * a.adjoint() * b.adjoint()).scalar();
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(std::vector<SiteKind> kinds, std::vector<int> dims)
    : kinds_(std::move(kinds)), dims_(std::move(dims)) {
    if (kinds_.size() != dims_.size()) throw SpecError("state: kinds/dims length mismatch");
    init_strides();
}

void StateVector::init_strides() {
    size_t total = 1;
    strides_.assign(dims_.size(), 1);
    for (int s = static_cast<int>(dims_.size()) - 1; s >= 0; --s) {
        if (dims_[s] < 1) throw SpecError("state: site dimension must be positive");
        strides_[s] = total;
        if (total > (size_t(1) << 40) / dims_[s]) throw CapExceeded("state dimension overflow");
        total *= dims_[s];
    }
    amps_.assign(total, 0.0);
}

StateVector StateVector::basis(std::vector<SiteKind> kinds, std::vector<int> dims, const std::vector<int>& digits) {
    StateVector s(std::move(kinds), std::move(dims));
    if (digits.size() != s.dims_.size()) throw SpecError("state: digit count mismatch");
    size_t idx = 0;
    for (size_t i = 0; i < digits.size(); ++i) idx += digits[i] * s.strides_[i];
    s.amps_[idx] = 1.0;
    return s;
}

double StateVector::norm() const { return std::sqrt(std::abs(kernels::parallel::inner(amps_, amps_))); }

void StateVector::normalize() {
    double n = norm();
    if (n == 0) throw SpecError("cannot normalize the zero vector");
    for (auto& a : amps_) a /= n;
}

cplx StateVector::inner(const StateVector& other) const {
    if (dims_ != other.dims_) throw SpecError("inner: layouts differ");
    return kernels::parallel::inner(amps_, other.amps_);
}

StateVector StateVector::append_sites(const std::vector<SiteKind>& kinds, const std::vector<int>& dims,
                                      const std::vector<int>& digits) const {
    auto k = kinds_;
    auto d = dims_;
    k.insert(k.end(), kinds.begin(), kinds.end());
    d.insert(d.end(), dims.begin(), dims.end());
    StateVector out(k, d);
    size_t block = 1;
    size_t offset = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        offset = offset * dims[i] + digits.at(i);
        block *= dims[i];
    }
    for (size_t x = 0; x < amps_.size(); ++x) out.amps_[x * block + offset] = amps_[x];
    return out;
}

std::vector<int> StateVector::digits(size_t index) const {
    std::vector<int> d(dims_.size());
    for (size_t s = 0; s < dims_.size(); ++s) d[s] = static_cast<int>((index / strides_[s]) % dims_[s]);
    return d;
}

void check_support(const ProductOperator& op, const std::vector<SiteKind>& kinds, const std::vector<int>& dims) {
    for (const auto& [site, f] : op.factors()) {
        if (site < 0 || site >= static_cast<int>(kinds.size())) {
            throw SpecError("operator acts on site " + std::to_string(site) + " outside the state");
        }
        if (f.dim() != dims[site]) throw SpecError("operator dimension differs from site dimension");
        if (f.kind() && *f.kind() != kinds[site]) {
            throw SpecError(std::string("site-kind mismatch at site ") + std::to_string(site) + ": operator for " +
                            site_kind_name(*f.kind()) + ", site is " + site_kind_name(kinds[site]));
        }
    }
}

StateVector apply(const ProductOperator& op, const StateVector& psi) {
    check_support(op, psi.kinds(), psi.dims());
    StateVector out(psi.kinds(), psi.dims());
    kernels::parallel::apply(kernels::compile(op, psi), psi.amps(), out.amps());
    return out;
}

cplx expectation(const ProductOperator& op, const StateVector& psi) {
    check_support(op, psi.kinds(), psi.dims());
    return kernels::parallel::expectation(kernels::compile(op, psi), psi.amps());
}

double fidelity(const StateVector& a, const StateVector& b) {
    double na = a.norm(), nb = b.norm();
    if (na == 0 || nb == 0) return 0;
    return std::norm(a.inner(b)) / (na * na * nb * nb);
}

int basis_action(const ProductOperator& op, std::vector<int>& digits, int L) {
    int64_t ph = 0;
    for (const auto& [site, m] : op.factors()) {
        if (L % m.modulus()) throw SpecError("basis_action: modulus mismatch");
        int d = digits.at(site);
        ph += int64_t(m.phases()[d]) * (L / m.modulus());
        digits[site] = m.perm()[d];
    }
    return static_cast<int>(((ph % L) + L) % L);
}

StateVector reorder_sites(const StateVector& psi, const std::vector<int>& order) {
    int n = psi.site_count();
    if (static_cast<int>(order.size()) != n) throw SpecError("reorder_sites: order has the wrong length");
    std::vector<SiteKind> kinds(n);
    std::vector<int> dims(n);
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        int o = order[s];
        if (o < 0 || o >= n || seen[o]) throw SpecError("reorder_sites: not a permutation");
        seen[o] = true;
        kinds[s] = psi.kinds()[o];
        dims[s] = psi.dims()[o];
    }
    StateVector out(kinds, dims);
    for (size_t i = 0; i < psi.size(); ++i) {
        if (psi[i] == cplx(0)) continue;
        auto d = psi.digits(i);
        size_t j = 0;
        for (int s = 0; s < n; ++s) j += out.stride(s) * d[order[s]];
        out[j] = psi[i];
    }
    return out;
}

}  // namespace gauge

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

#ifndef GAUGE_OPERATORS_HPP
#define GAUGE_OPERATORS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gauge/cyclotomic.hpp"
#include "gauge/group.hpp"

namespace gauge {

using cplx = std::complex<double>;

/// VertexDual: local space C[G^] (basis labelled by characters).
/// EdgeGroup: local space C[G] (basis labelled by group elements).
enum class SiteKind { VertexDual, EdgeGroup };

const char* site_kind_name(SiteKind k);

/// op|b> = w^phase[b] |perm[b]>, w = exp(2 pi i / L).
class MonomialOperator {
   public:
    MonomialOperator() = default;
    static MonomialOperator identity(int dim, int L, std::optional<SiteKind> kind = std::nullopt);
    MonomialOperator(std::vector<int> perm, std::vector<int> phase, int L, std::optional<SiteKind> kind = std::nullopt);

    int dim() const { return static_cast<int>(perm_.size()); }
    int modulus() const { return L_; }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& phases() const { return phase_; }
    std::optional<SiteKind> kind() const { return kind_; }

    /// Matrix product: (a * b)|x> = a(b|x>).
    MonomialOperator operator*(const MonomialOperator& b) const;
    MonomialOperator adjoint() const;
    MonomialOperator pow(int e) const;
    bool is_identity() const;
    /// Some c with op = c * I.
    std::optional<Phase> scalar() const;
    Cyclotomic trace() const;
    /// Same matrix (kinds are not compared).
    bool operator==(const MonomialOperator& o) const;
    bool operator!=(const MonomialOperator& o) const { return !(*this == o); }
    /// Row-major dense matrix.
    std::vector<cplx> dense() const;

   private:
    std::vector<int> perm_;
    std::vector<int> phase_;
    int L_ = 1;
    std::optional<SiteKind> kind_;
};

// Generalized clock and shift operators. Basis index = element/character index.
/// X_g|h> = |gh> on C[G].
MonomialOperator shift_x(const GroupElement& g);
/// Z_chi|h> = chi(h)|h> on C[G].
MonomialOperator clock_z(const DualCharacter& chi);
/// X_chi|psi> = |chi psi> on C[G^].
MonomialOperator shift_x_dual(const DualCharacter& chi);
/// Z_g|psi> = psi(g)|psi> on C[G^].
MonomialOperator clock_z_dual(const GroupElement& g);
/// X^alpha_g|h> = alpha(g,h)|gh> on C[G].
MonomialOperator projective_x(const Cocycle& alpha, const GroupElement& g);
/// X~^{conj alpha}_g|h> = conj(alpha)(h g^-1, g)|h g^-1> on C[G].
MonomialOperator projective_x_tilde(const Cocycle& alpha, const GroupElement& g);
/// gamma a cocycle on G^ (same orders): the same constructions acting on C[G^].
MonomialOperator projective_x_dual(const Cocycle& gamma, const DualCharacter& chi);
MonomialOperator projective_x_tilde_dual(const Cocycle& gamma, const DualCharacter& chi);

/// Tensor product of site-local monomials, identity off-support.
class ProductOperator {
   public:
    ProductOperator() = default;
    ProductOperator(int site, MonomialOperator op);

    const std::map<int, MonomialOperator>& factors() const { return factors_; }
    /// Left-multiply the factor at `site` by `op`.
    ProductOperator& times(int site, const MonomialOperator& op);
    ProductOperator operator*(const ProductOperator& b) const;
    ProductOperator adjoint() const;
    std::vector<int> support() const;
    std::optional<Phase> scalar() const;
    bool is_identity() const;
    bool operator==(const ProductOperator& o) const;
    bool operator!=(const ProductOperator& o) const { return !(*this == o); }

   private:
    std::map<int, MonomialOperator> factors_;
};

/// a b a^-1 b^-1 if it is a multiple of the identity; nullopt otherwise.
std::optional<Phase> commutation_phase(const ProductOperator& a, const ProductOperator& b);
std::optional<Phase> commutation_phase(const MonomialOperator& a, const MonomialOperator& b);

/// Dense amplitudes over the mixed-radix product of site spaces, first site
/// most significant.
class StateVector {
   public:
    StateVector() = default;
    StateVector(std::vector<SiteKind> kinds, std::vector<int> dims);
    /// Basis state with the given per-site digits.
    static StateVector basis(std::vector<SiteKind> kinds, std::vector<int> dims, const std::vector<int>& digits);

    int site_count() const { return static_cast<int>(kinds_.size()); }
    size_t size() const { return amps_.size(); }
    const std::vector<SiteKind>& kinds() const { return kinds_; }
    const std::vector<int>& dims() const { return dims_; }
    size_t stride(int site) const { return strides_[site]; }
    std::vector<cplx>& amps() { return amps_; }
    const std::vector<cplx>& amps() const { return amps_; }
    cplx& operator[](size_t i) { return amps_[i]; }
    const cplx& operator[](size_t i) const { return amps_[i]; }

    double norm() const;
    void normalize();
    /// <this|other>.
    cplx inner(const StateVector& other) const;
    /// |this> (x) |0...0> on extra sites appended at the end.
    StateVector append_sites(const std::vector<SiteKind>& kinds, const std::vector<int>& dims,
                             const std::vector<int>& digits) const;
    std::vector<int> digits(size_t index) const;

   private:
    void init_strides();
    std::vector<SiteKind> kinds_;
    std::vector<int> dims_;
    std::vector<size_t> strides_;
    std::vector<cplx> amps_;
};

StateVector apply(const ProductOperator& op, const StateVector& psi);
/// <psi|op|psi>.
cplx expectation(const ProductOperator& op, const StateVector& psi);
/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const StateVector& a, const StateVector& b);

/// Check factor sites and kinds against a state layout; throws SpecError.
void check_support(const ProductOperator& op, const std::vector<SiteKind>& kinds, const std::vector<int>& dims);

/// Acts on a basis state given by digits, in place; returns the phase exponent mod L.
/// Every factor's modulus must divide L.
int basis_action(const ProductOperator& op, std::vector<int>& digits, int L);

/// New site s is old site order[s].
StateVector reorder_sites(const StateVector& psi, const std::vector<int>& order);

}  // namespace gauge

#endif

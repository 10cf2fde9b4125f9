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


#ifndef GAUGE_GAUGING_HPP
#define GAUGE_GAUGING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gauge/cyclotomic.hpp"
#include "gauge/group.hpp"
#include "gauge/lattice.hpp"
#include "gauge/operators.hpp"

namespace gauge {

inline constexpr uint64_t kDefaultDimensionCap = uint64_t(1) << 24;

/// One gauging map G_j. Even layers act on a vertex row (C[G^], u_g = Z_g) and
/// add an edge row; odd layers act on an edge row (C[G], u = Z_chi) and add a
/// vertex row. Layer 0 sits at the bottom.
struct LayerSpec {
    int index = 0;
    /// Sites in the input row.
    int n = 2;
    Boundary boundary = Boundary::Periodic;
    /// On G for even layers, on G^ (same orders) for odd ones.
    std::optional<Cocycle> twist;

    bool even() const { return index % 2 == 0; }
    int output_size() const { return boundary == Boundary::Periodic ? n : n + 1; }
    SiteKind input_kind() const { return even() ? SiteKind::VertexDual : SiteKind::EdgeGroup; }
    SiteKind output_kind() const { return even() ? SiteKind::EdgeGroup : SiteKind::VertexDual; }
    void validate(const GroupSpec& g) const;
};

/// Indices 0..M-1 in order, one boundary condition, sizes chaining.
void validate_layer_stack(const GroupSpec& group, const std::vector<LayerSpec>& layers);

/// M layers on N base sites; twists apply to every even / odd layer.
std::vector<LayerSpec> make_layers(int n, int m, Boundary bc, const std::optional<Cocycle>& even_twist = std::nullopt,
                                   const std::optional<Cocycle>& odd_twist = std::nullopt);

/// Exact sparse matrix: scale * (sum of roots of unity) per entry.
struct ExactMatrix {
    uint64_t rows = 0, cols = 0;
    int modulus = 1;
    double scale = 1.0;
    std::vector<std::map<uint64_t, Cyclotomic>> columns;

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
    /// op * this, op acting on the row space described by (dims).
    ExactMatrix left_multiply(const ProductOperator& op, const std::vector<int>& row_dims) const;
    /// this * op, op acting on the column space.
    ExactMatrix right_multiply(const ProductOperator& op, const std::vector<int>& col_dims) const;
    std::vector<cplx> dense() const;  // row-major
};

/// Same shape and the same nonzero entries; explicit zeros and the scale are ignored.
bool equal_entries(const ExactMatrix& a, const ExactMatrix& b);

/// G_j as an isometry from the input row onto (input row, new row). Output
/// sites are numbered input first, then the new row left to right.
class GaugingMap {
   public:
    GaugingMap(GroupSpec group, LayerSpec layer, uint64_t cap = kDefaultDimensionCap);

    const GroupSpec& group() const { return group_; }
    const LayerSpec& layer() const { return layer_; }
    int input_sites() const { return layer_.n; }
    int output_sites() const { return layer_.n + layer_.output_size(); }
    std::vector<SiteKind> input_kinds() const;
    std::vector<SiteKind> output_kinds() const;
    std::vector<int> input_dims() const;
    std::vector<int> output_dims() const;
    /// Doubled x coordinates of the input and new rows.
    const std::vector<int>& input_x() const { return in_x_; }
    const std::vector<int>& output_x() const { return out_x_; }

    /// The projector terms at input site i, one per element of the input-row group.
    const std::vector<ProductOperator>& terms(int i) const { return terms_.at(i); }
    /// Overall factor making symmetric inputs unit norm.
    double normalization() const { return norm_; }

    /// Dense reference path.
    StateVector apply(const StateVector& in) const;
    ExactMatrix exact_matrix() const;
    /// prod_{new row} Z_a, the emergent dual symmetry.
    ProductOperator emergent_symmetry(int a) const;

   private:
    GroupSpec group_;
    LayerSpec layer_;
    uint64_t cap_;
    std::vector<int> in_x_, out_x_;
    std::vector<std::vector<ProductOperator>> terms_;
    double norm_ = 1.0;
};

struct VerifyReport {
    int64_t checked = 0;
    double max_deviation = 0.0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

struct ComposeResult {
    Lattice2D lattice;  // rows 0..M, vertically open
    StateVector state;
    /// Norm after each layer (1 for symmetric inputs).
    std::vector<double> layer_norms;
};

/// Layer-0 input must be a vertex row (C[G^] sites).
ComposeResult compose_gauging(const GroupSpec& group, const std::vector<LayerSpec>& layers, const StateVector& input,
                              uint64_t cap = kDefaultDimensionCap);

/// prod_j prod_i P applied to input (x) |0...0> on all later rows, renormalized.
StateVector stacked_projector_state(const GroupSpec& group, const std::vector<LayerSpec>& layers,
                                    const StateVector& input, uint64_t cap = kDefaultDimensionCap);

/// X~ Z X (Z^dag) around input site x of layer j, as left behind by the
/// composed map. The last factor is present when layer j+1 exists.
ProductOperator local_symmetry_operator(const Lattice2D& lat, const std::vector<LayerSpec>& layers, int j, int x,
                                        int a);

VerifyReport verify_local_symmetry(const ComposeResult& out, const std::vector<LayerSpec>& layers,
                                   double tol = 1e-10);

struct EmergentReport {
    VerifyReport matrix;     // W * G == G exactly
    VerifyReport operators;  // W commutes with every projector term and fixes |0...0>
    bool pass() const { return matrix.pass() && operators.pass(); }
};
EmergentReport verify_emergent_symmetry(const GaugingMap& map);

/// The Z string between input sites i < i2 on the new row, for element a of
/// the input-row group.
ProductOperator string_order_image(const GaugingMap& map, int i, int i2, int a);
/// G (X_a (x) X_a^dag) == (X_a (x) Z-string (x) X_a^dag) G, exactly.
VerifyReport verify_string_order_mapping(const GroupSpec& group, const LayerSpec& layer, int i, int i2, int a);

/// The single-site state with N nested |omega> pairs; sites ordered by
/// position -N..N. u_g is Z_g on a vertex site and X_g on an edge site.
StateVector zero_dim_gauge(const GroupSpec& group, const StateVector& psi, int iterations);

/// Von Neumann entropy (natural log) of sites [0, cut).
double entanglement_entropy(const StateVector& psi, int cut);

}  // namespace gauge

#endif

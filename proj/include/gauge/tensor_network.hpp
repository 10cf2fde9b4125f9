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


#ifndef GAUGE_TENSOR_NETWORK_HPP
#define GAUGE_TENSOR_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauge/gauging.hpp"
#include "gauge/group.hpp"
#include "gauge/lattice.hpp"
#include "gauge/operators.hpp"

namespace gauge {

/// (num / den) * w^k, or zero when num == 0.
struct ExactEntry {
    int64_t num = 0;
    int64_t den = 1;
    Phase phase;

    bool zero() const { return num == 0; }
    cplx value() const;
    ExactEntry times(const ExactEntry& o) const;
    /// Equal as complex numbers (rationals reduced, phases compared on a common modulus).
    bool operator==(const ExactEntry& o) const;
    bool operator!=(const ExactEntry& o) const { return !(*this == o); }
};

/// M~ carries u_g = Z_g on a vertex site; with that choice it coincides with M_e.
enum class TensorName { MTilde, Me, Mo, Te, To };
const char* tensor_name_str(TensorName n);
TensorName parse_tensor_name(const std::string& s);

/// Legs are (left, right, out[, in]) for the single tensors. Left and out
/// are kets, right and in are bras: X.T acts on a ket leg, T.X on a bra leg.
/// Entries are row-major over the legs, first leg most significant.
struct GaugeTensor {
    std::string name;
    GroupSpec group;
    std::vector<std::string> legs;
    std::vector<bool> ket;
    std::vector<int> shape;
    std::vector<ExactEntry> entries;

    size_t offset(const std::vector<int>& idx) const;
    const ExactEntry& at(const std::vector<int>& idx) const { return entries[offset(idx)]; }
    int leg(const std::string& name) const;
    int64_t nonzero_count() const;
    /// Every nonzero entry has the same |value|.
    bool uniform_modulus() const;
    bool operator==(const GaugeTensor& o) const;
};

/// `twist` applies to T tensors only (alpha on G for T_e, gamma on G^ for T_o).
GaugeTensor build_tensor(TensorName name, const GroupSpec& group, const std::optional<Cocycle>& twist = std::nullopt);

/// Applies op on one leg (op.T for a ket leg, T.op for a bra leg).
GaugeTensor apply_on_leg(const GaugeTensor& t, int leg, const MonomialOperator& op);

/// `upper`'s in leg contracted with `lower`'s out leg. Legs of the result:
/// upper_left, upper_right, lower_left, lower_right, out.
GaugeTensor blocked_tensor(const GaugeTensor& upper, const GaugeTensor& lower);

/// Largest |entry difference|; 0 when the tensors are equal.
double max_entry_deviation(const GaugeTensor& a, const GaugeTensor& b);

struct LegOperator {
    std::string leg;
    MonomialOperator op;
};

struct IdentityCheck {
    std::string tensor;
    std::string relation;
    std::string label;  // element or character the relation is instantiated at
    std::vector<std::string> legs;
    bool exact = false;
    double max_deviation = 0.0;
    /// The lower Z pair of the blocked relations is printed in two orders;
    /// the second order is kept here and only expected to hold when Z = Z^dag.
    bool alternate_order = false;
};

struct PullThroughReport {
    std::string tensor;
    GroupSpec group;
    std::vector<IdentityCheck> checks;
    int64_t failures() const;
    /// Alternate-order checks that do not hold.
    int64_t alternate_failures() const;
    double max_deviation() const;
    bool pass() const { return failures() == 0; }
};

/// name: one of M~, M_e, M_o, T_e, T_o, M_e/T_o, M_o/T_e, or "all".
PullThroughReport pull_through_check(const std::string& name, const GroupSpec& group);

/// The layer as a chain of M and T tensors sorted by position, contracted
/// exactly. Rows and columns use the GaugingMap site order; the scale holds
/// the T prefactors only.
ExactMatrix contract_mpo_layer(const GroupSpec& group, const LayerSpec& layer, uint64_t cap = kDefaultDimensionCap);
/// c with GaugingMap = c * contract_mpo_layer.
double mpo_normalization(const GroupSpec& group, const LayerSpec& layer);

struct TensorSite {
    TensorName name;
    int row;
    int x;
    int site;  // lattice site id
};

enum class PepesGeometry { Layered, AdjointSquare };

struct PEPESNetwork {
    GroupSpec group;
    std::vector<LayerSpec> layers;
    Lattice2D lattice;
    PepesGeometry geometry = PepesGeometry::Layered;
    /// Two rows per layer: its M tensors, then its T tensors.
    std::vector<std::vector<TensorSite>> tensor_rows;
    /// Per layer: "trace" or the pair of virtual caps.
    std::vector<std::string> caps;

    std::vector<int> row_sizes() const;
};

PEPESNetwork assemble_pepes(const GroupSpec& group, const std::vector<LayerSpec>& layers,
                            PepesGeometry geometry = PepesGeometry::Layered);
/// Layered: the state on the lattice, same numbering as compose_gauging.
/// AdjointSquare: the layers followed by their adjoints in reverse, back on
/// the layer-0 row.
StateVector contract_pepes(const PEPESNetwork& net, const StateVector& input, uint64_t cap = kDefaultDimensionCap,
                           bool parallel = true);

/// The truncated plaquette just outside a horizontally open boundary: the
/// X-type corner on the outermost site of row j+1 and the Z^dag top on the
/// outermost site of row j+2.
struct RemnantCheck {
    int row;  // bottom row j of the missing plaquette
    bool left;
    int element;
    ProductOperator op;
    cplx expectation;
    bool in_stabilizer_set = false;
};
std::vector<RemnantCheck> boundary_remnants(const ComposeResult& composed);

/// {name, group, legs, shape, entries: [{num, den, phase_k, phase_L}]}.
std::string tensor_json(const GaugeTensor& t, int indent = -1);

}  // namespace gauge

#endif

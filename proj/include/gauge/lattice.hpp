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

#ifndef GAUGE_LATTICE_HPP
#define GAUGE_LATTICE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gauge/group.hpp"
#include "gauge/operators.hpp"

namespace gauge {

enum class Boundary { Periodic, Open };

const char* boundary_name(Boundary b);

struct SiteInfo {
    int row;
    int x;  // doubled coordinate: vertices at even x, edges at odd x
    SiteKind kind;
};

/// Rotated square lattice of alternating rows: even rows hold C[G^] vertex
/// sites, odd rows hold C[G] edge sites. Row j sits at x = j mod 2 + 2k.
///
/// Horizontal periodic: N sites per row, x taken mod 2N.
/// Horizontal open: row j holds N + j sites at x = -j + 2k (trapezoid).
/// Vertical periodic: rows 0..M-1 with row M identified with row 0, M even.
/// Vertical open: rows 0..M.
/// Sites are numbered by (row, x), row 0 first.
class Lattice2D {
   public:
    Lattice2D() = default;
    Lattice2D(GroupSpec g, int n, int m, Boundary vertical, Boundary horizontal);

    const GroupSpec& group() const { return group_; }
    int n() const { return n_; }
    int m() const { return m_; }
    Boundary vertical() const { return vertical_; }
    Boundary horizontal() const { return horizontal_; }
    bool is_torus() const { return vertical_ == Boundary::Periodic; }
    int rows() const { return static_cast<int>(row_x_.size()); }

    const std::vector<SiteInfo>& sites() const { return sites_; }
    int site_count() const { return static_cast<int>(sites_.size()); }
    const std::vector<int>& row_positions(int row) const { return row_x_.at(row); }
    /// Site id at (row, x) after wrapping periodic directions.
    std::optional<int> site(int row, int x) const;
    int site_or_throw(int row, int x) const;
    std::vector<SiteKind> kinds() const;
    std::vector<int> dims() const;

    static SiteKind row_kind(int row) { return row % 2 == 0 ? SiteKind::VertexDual : SiteKind::EdgeGroup; }

   private:
    GroupSpec group_;
    int n_ = 0, m_ = 0;
    Boundary vertical_ = Boundary::Open, horizontal_ = Boundary::Periodic;
    std::vector<std::vector<int>> row_x_;
    std::vector<SiteInfo> sites_;
    std::map<std::pair<int, int>, int> index_;
};

/// Code data. `gamma` and `beta` live on G^ and use the same cyclic orders as G.
struct CodeSpec {
    Lattice2D lattice;
    Cocycle alpha;
    Cocycle gamma;
    Cocycle beta;
    /// Unbroken subgroup of the bottom boundary input; unset means no restriction.
    std::optional<std::vector<GroupElement>> boundary_subgroup;
    /// Mirror every plaquette left/right.
    bool reflected = false;

    static CodeSpec untwisted(const Lattice2D& lattice);
    void validate() const;
};

enum class PlaquetteType { Group, Dual };
enum class TermRole { Bulk, Bottom, Top };
const char* plaquette_type_name(PlaquetteType t);
const char* term_role_name(TermRole r);

struct PlaquetteLabel {
    int row;  // center
    int x;
    PlaquetteType type;
    TermRole role;
    bool operator==(const PlaquetteLabel& o) const {
        return row == o.row && x == o.x && type == o.type && role == o.role;
    }
    bool operator<(const PlaquetteLabel& o) const;
    std::string str() const;
};

/// One commuting representation a -> S(a) over a subgroup of G or G^
/// (element indices; index 0 is the identity).
struct Plaquette {
    PlaquetteLabel label;
    GroupSpec group;  // G for Group plaquettes, G^ (same orders) for Dual ones
    std::vector<int> elements;
    std::vector<ProductOperator> ops;
    std::vector<int> sites;
};

struct StabilizerTerm {
    PlaquetteLabel label;
    int element;  // element index in G (Group) or G^ (Dual)
    ProductOperator op;
};

/// Full bulk plaquette representations (all elements, identity included).
std::vector<Plaquette> bulk_plaquettes(const CodeSpec& spec);
/// Bottom (restricted to the surviving characters) or free-top plaquettes.
std::vector<Plaquette> boundary_plaquettes(const CodeSpec& spec, TermRole which,
                                           const std::optional<std::vector<DualCharacter>>& allowed = std::nullopt);
/// Every plaquette of the code: bulk, plus bottom and top when vertically open.
std::vector<Plaquette> all_plaquettes(const CodeSpec& spec);

/// Non-identity terms.
std::vector<StabilizerTerm> build_bulk_stabilizers(const CodeSpec& spec);
std::vector<StabilizerTerm> build_boundary_terms(const CodeSpec& spec, TermRole which,
                                                 const std::optional<std::vector<DualCharacter>>& allowed = std::nullopt);
std::vector<StabilizerTerm> terms_of(const std::vector<Plaquette>& plaquettes);

struct CommuteReport {
    bool ok = true;
    int64_t pairs_checked = 0;
    std::vector<std::pair<int, int>> failures;  // term indices
};
CommuteReport check_all_commute(const std::vector<StabilizerTerm>& terms);

enum class DimensionMethod { Auto, TraceExpansion, GroupCounting, DenseOracle };
const char* dimension_method_name(DimensionMethod m);

struct DimensionOptions {
    DimensionMethod method = DimensionMethod::Auto;
    /// Trace expansion runs when sum_p log2|K_p| stays within this many bits.
    int trace_cap_bits = 20;
    /// Largest Hilbert space the dense oracle will touch.
    uint64_t dense_cap = uint64_t(1) << 24;
    bool parallel = true;
};

struct DimensionResult {
    uint64_t dimension = 0;
    DimensionMethod method = DimensionMethod::Auto;
    /// Sum over assignments of tr prod S (trace expansion only), as a decimal string.
    std::string trace_sum;
};

/// dim of the common +1 space of the plaquettes on `site_count` sites, each
/// a copy of C[site_group] (or its dual; both have the same index algebra).
DimensionResult ground_space_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                       int site_count, const DimensionOptions& opts = {});
DimensionResult ground_space_dimension(const CodeSpec& spec, const DimensionOptions& opts = {});

/// log2 of the number of assignments in the trace expansion.
double expansion_bits(const std::vector<Plaquette>& plaquettes);

// The individual routes behind ground_space_dimension.
DimensionResult trace_expansion_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                          int site_count, bool parallel);
DimensionResult group_counting_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                         int site_count);
DimensionResult dense_oracle_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                       int site_count, uint64_t cap);

/// Order of the subgroup of Z_L^w generated by the rows (Howell echelon).
/// If `kernel_width` > 0 the last kernel_width columns are a tag block that
/// is not reduced; rows whose first w - kernel_width entries vanish after
/// elimination are returned in `kernel_rows`.
uint64_t submodule_order(std::vector<std::vector<int>> rows, int L, int kernel_width = 0,
                         std::vector<std::vector<int>>* kernel_rows = nullptr);

/// The dense ground space projector applied to the reference product state
/// |e^...>|e...>, normalized.
StateVector code_ground_state(const CodeSpec& spec, uint64_t cap = uint64_t(1) << 24);
/// Projector prod_p (1/|K_p|) sum_a S_p(a) applied to a state.
StateVector project(const std::vector<Plaquette>& plaquettes, const StateVector& psi);

struct Logical {
    std::string name;
    std::string orientation;  // "horizontal" | "vertical"
    std::string label;
    ProductOperator op;
    bool commutes = true;
    /// For an excluded string: the first stabilizer it fails to commute with.
    std::optional<PlaquetteLabel> witness;
    std::optional<int> witness_element;
};

struct LogicalSet {
    std::vector<Logical> logicals;
    std::vector<Logical> excluded;
};

/// Horizontal Z strings and vertical X strings, one per cyclic generator.
LogicalSet logical_operators(const CodeSpec& spec);

/// Vertical strings on the torus or open lattice.
ProductOperator vertical_x_group_string(const Lattice2D& lat, int x, const GroupElement& g, int row_from = 1,
                                        int row_to = -1);
ProductOperator vertical_x_dual_string(const Lattice2D& lat, int x, const DualCharacter& chi, int row_from = 0,
                                       int row_to = -1);
/// Horizontal string: Z_g on an even row, or Z_chi on an odd row.
ProductOperator horizontal_z_group_string(const Lattice2D& lat, int row, const GroupElement& g);
ProductOperator horizontal_z_dual_string(const Lattice2D& lat, int row, const DualCharacter& chi);

}  // namespace gauge

#endif

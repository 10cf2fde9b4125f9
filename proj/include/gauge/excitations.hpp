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


#ifndef GAUGE_EXCITATIONS_HPP
#define GAUGE_EXCITATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gauge/group.hpp"
#include "gauge/lattice.hpp"
#include "gauge/operators.hpp"

namespace gauge {

struct SyndromeEntry {
    PlaquetteLabel label;
    /// Conjugation phase of each element term; nullopt where it is not a scalar.
    std::vector<std::optional<Phase>> phases;
    bool violated = false;
    bool scalar = true;
};

struct SyndromeMap {
    std::vector<SyndromeEntry> entries;

    int violated_count() const;
    std::vector<PlaquetteLabel> violated() const;
    bool trivial() const { return violated_count() == 0; }
    bool all_scalar() const;
    /// Same phases entry by entry.
    bool operator==(const SyndromeMap& o) const;
};

/// Eigenvalue of each stabilizer term on op|gs>, from S op = c op S.
SyndromeMap syndrome(const std::vector<Plaquette>& plaquettes, const ProductOperator& op);
/// Over all_plaquettes(spec).
SyndromeMap syndrome(const CodeSpec& spec, const ProductOperator& op);
/// Entry-wise product of phases.
SyndromeMap combine(const SyndromeMap& a, const SyndromeMap& b);

enum class StringFlavor { X, Z };

struct StringSpec {
    /// Site ids; consecutive sites share a plaquette and have the same kind.
    std::vector<int> path;
    StringFlavor flavor = StringFlavor::X;
    /// Element of G on C[G]-labelled operators (X on edges, Z on vertices),
    /// else a character of G.
    int label = 0;
    /// X-strings on edges use X^alpha_g when set.
    bool twisted = false;
};

ProductOperator string_operator(const CodeSpec& spec, const StringSpec& s);

/// Vertical path through every row of the given kind at column x.
StringSpec vertical_path(const Lattice2D& lat, int x, int row_from, int row_to, StringFlavor flavor, int label);
/// Horizontal path along row, `length` sites starting at x.
StringSpec horizontal_path(const Lattice2D& lat, int row, int x, int length, StringFlavor flavor, int label);

/// Commutation phase of the two string operators; throws InternalConsistencyError if not scalar.
Phase braiding_phase(const CodeSpec& spec, const StringSpec& s1, const StringSpec& s2);

struct BendCase {
    int shift = 0;  // top endpoint moved by 2*shift in x
    int count = 0;
    bool relocated = false;
};

struct ConfinementReport {
    GroupElement g;
    bool twisted = false;
    int single_count = 0;  // single X^alpha_g
    std::vector<int> lengths, horizontal_counts;
    double slope = 0;
    std::vector<int> separations, dipole_counts;
    std::vector<BendCase> bends;
    bool dipole_braids_trivially = true;

    bool single_odd() const { return single_count % 2 == 1; }
    bool horizontal_growing() const;
    bool dipole_constant() const;
    bool bends_relocate() const;
    bool pass() const;
};

/// X X-bar dipole across the Group plaquette centered (row, x), stacked
/// `separation` times upward.
ProductOperator dipole_operator(const CodeSpec& spec, const GroupElement& g, int row, int x, int separation);

/// Needs a torus with N > max_length and M >= 2 * max_length + 2.
ConfinementReport confinement_report(const CodeSpec& spec, const GroupElement& g, int max_length = 3);

}  // namespace gauge

#endif

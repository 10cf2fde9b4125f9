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


#ifndef GAUGE_FINITE_GROUP_HPP
#define GAUGE_FINITE_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gauge/cyclotomic.hpp"
#include "gauge/group.hpp"
#include "gauge/operators.hpp"

namespace gauge {

/// A finite group from its multiplication table, mul[a][b] = index of ab.
class FiniteGroup {
   public:
    FiniteGroup() = default;
    /// Checks closure, associativity, a two-sided identity and inverses.
    static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table);
    static FiniteGroup from_abelian(const GroupSpec& g);
    /// S3 as permutations of {0,1,2}, identity first, then (01), (02), (12), (012), (021).
    static FiniteGroup s3();

    const std::string& name() const { return name_; }
    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    bool abelian() const;
    /// Class id per element, ids numbered in order of first appearance.
    std::vector<int> conjugacy_classes() const;

   private:
    std::string name_;
    int n_ = 0, e_ = 0;
    std::vector<int> table_, inv_;
};

/// Values of a class function, exact in Z[w], w = exp(2 pi i / modulus).
struct ClassFunction {
    std::string name;
    int modulus = 1;
    std::vector<Cyclotomic> values;
};

/// Throws SpecError unless chi(h g h^-1) = chi(g) everywhere.
void check_class_function(const FiniteGroup& g, const ClassFunction& chi);

/// Irreducible characters: S3 (trivial, sign, standard) and any Abelian group.
std::vector<ClassFunction> s3_characters();
std::vector<ClassFunction> abelian_characters(const GroupSpec& g);

/// Diagonal operator on C[G]^n, entries indexed mixed-radix like StateVector.
struct DiagonalOperator {
    int sites = 0;
    int dim = 0;
    std::vector<Cyclotomic> diag;

    DiagonalOperator operator*(const DiagonalOperator& o) const;
    DiagonalOperator operator+(const DiagonalOperator& o) const;
    DiagonalOperator scaled(int64_t s) const;
    bool operator==(const DiagonalOperator& o) const;
    /// Equal to a product operator's matrix, checked entrywise.
    bool equals(const ProductOperator& op) const;
};

/// Gamma = sum chi(g_1 ... g_n) |g_1 ... g_n><g_1 ... g_n|.
DiagonalOperator irrep_flux_operator(const FiniteGroup& g, const ClassFunction& chi, int n);

/// N^gamma = <chi_sigma chi_rho, chi_gamma>, one per entry of `table`.
std::vector<int64_t> fusion_coefficients(const FiniteGroup& g, const std::vector<ClassFunction>& table, int sigma,
                                         int rho);

struct FusionCheck {
    int sigma = 0, rho = 0;
    std::vector<int64_t> coefficients;
    bool holds = false;
};
/// Gamma_sigma Gamma_rho == sum N Gamma_gamma for every ordered pair.
std::vector<FusionCheck> verify_fusion(const FiniteGroup& g, const std::vector<ClassFunction>& table, int n);

/// The gauge-field configuration (g_1 g_2^-1, ..., g_n g_1^-1) left by a
/// periodic gauging map, as element indices.
std::vector<int> zero_flux_configuration(const FiniteGroup& g, const std::vector<int>& matter);

}  // namespace gauge

#endif

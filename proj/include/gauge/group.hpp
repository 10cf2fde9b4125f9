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

#ifndef GAUGE_GROUP_HPP
#define GAUGE_GROUP_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace gauge {

using Exps = std::vector<int>;

/// Exact root of unity exp(2 pi i k / L).
class Phase {
   public:
    Phase() = default;
    Phase(int64_t k, int64_t L);

    int64_t k() const { return k_; }
    int64_t modulus() const { return L_; }

    Phase operator*(const Phase& o) const;
    Phase& operator*=(const Phase& o) { return *this = *this * o; }
    Phase inverse() const { return Phase(-k_, L_); }
    /// Same value expressed with modulus L (which must be a multiple of ours).
    Phase with_modulus(int64_t L) const;
    bool is_one() const { return k_ == 0; }
    bool operator==(const Phase& o) const;
    bool operator!=(const Phase& o) const { return !(*this == o); }
    std::complex<double> value() const;
    std::string str() const;

   private:
    int64_t k_ = 0;
    int64_t L_ = 1;
};

/// Finite Abelian group Z_{n_1} x ... x Z_{n_k}. Elements and characters are
/// both indexed mixed-radix with the first factor most significant.
class GroupSpec {
   public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    int order() const { return order_; }
    /// lcm of the cyclic orders; every phase of the library lives in Z_L.
    int phase_modulus() const { return L_; }

    int index_of(const Exps& e) const;
    Exps exps_at(int index) const;
    bool contains(const Exps& e) const;
    /// Index of a*b (or of the character product) from indices.
    int mul_index(int a, int b) const;
    int inv_index(int a) const;
    /// Exponent k (mod L) of chi(g) for character index chi, element index g.
    int pair_index(int chi, int g) const;

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }
    std::string str() const;

   private:
    std::vector<int> orders_;
    std::vector<int> strides_;
    int order_ = 1;
    int L_ = 1;
};

class GroupElement {
   public:
    GroupElement() = default;
    GroupElement(GroupSpec g, Exps exps);
    static GroupElement identity(const GroupSpec& g);
    static GroupElement from_index(const GroupSpec& g, int index);

    const GroupSpec& group() const { return group_; }
    const Exps& exps() const { return exps_; }
    int index() const { return group_.index_of(exps_); }
    bool is_identity() const;
    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return exps_ < o.exps_; }
    std::string str() const;

   private:
    GroupSpec group_;
    Exps exps_;
};

class DualCharacter {
   public:
    DualCharacter() = default;
    DualCharacter(GroupSpec g, Exps exps);
    static DualCharacter trivial(const GroupSpec& g);
    static DualCharacter from_index(const GroupSpec& g, int index);

    const GroupSpec& group() const { return group_; }
    const Exps& exps() const { return exps_; }
    int index() const { return group_.index_of(exps_); }
    bool is_trivial() const;
    bool operator==(const DualCharacter& o) const;
    bool operator!=(const DualCharacter& o) const { return !(*this == o); }
    bool operator<(const DualCharacter& o) const { return exps_ < o.exps_; }
    std::string str() const;

   private:
    GroupSpec group_;
    Exps exps_;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
DualCharacter compose(const DualCharacter& a, const DualCharacter& b);
DualCharacter inverse(const DualCharacter& a);
/// chi(g).
Phase pair(const DualCharacter& chi, const GroupElement& g);

std::vector<GroupElement> elements(const GroupSpec& g);
std::vector<DualCharacter> characters(const GroupSpec& g);

/// The dual group has the same cyclic orders; these relabel between the two.
GroupElement as_dual_group_element(const DualCharacter& chi);
DualCharacter as_character_of_dual(const GroupElement& g);

bool is_subgroup(const GroupSpec& g, const std::vector<GroupElement>& h);
/// Characters trivial on H.
std::vector<DualCharacter> restriction_kernel(const GroupSpec& g, const std::vector<GroupElement>& h);
/// Every subgroup, each sorted, in a deterministic order (trivial first).
std::vector<std::vector<GroupElement>> enumerate_subgroups(const GroupSpec& g);
/// Subgroup generated by the given element indices.
std::vector<int> generated_subgroup(const GroupSpec& g, const std::vector<int>& gens);
/// A small generating set of the subgroup given by element indices.
std::vector<int> generating_set(const GroupSpec& g, const std::vector<int>& subgroup);

/// Bilinear 2-cocycle alpha(a,b) = prod_{i<j} exp(2 pi i p_ij a_j b_i / gcd(n_i,n_j)).
class Cocycle {
   public:
    Cocycle() = default;
    /// `upper` lists p_ij for i<j in row-major order.
    Cocycle(GroupSpec g, std::vector<int> upper);
    static Cocycle trivial(const GroupSpec& g);

    const GroupSpec& group() const { return group_; }
    const std::vector<int>& upper() const { return upper_; }
    int p(int i, int j) const;
    bool is_trivial() const;

    Phase operator()(const GroupElement& a, const GroupElement& b) const;
    /// Exponent mod L of alpha for element indices.
    int exponent(int a, int b) const { return table_[a * group_.order() + b]; }
    bool operator==(const Cocycle& o) const { return group_ == o.group_ && upper_ == o.upper_; }
    std::string str() const;

   private:
    GroupSpec group_;
    std::vector<int> upper_;
    std::vector<int> table_;
};

/// Character h -> alpha(g,h)/alpha(h,g).
DualCharacter slant_product(const Cocycle& alpha, const GroupElement& g);
/// One bilinear representative per class of H^2, trivial first.
std::vector<Cocycle> enumerate_cocycle_classes(const GroupSpec& g);
/// Exhaustive: the cocycle condition on every triple.
bool satisfies_cocycle_condition(const Cocycle& alpha);
/// Exhaustive search for mu with alpha(a,b) = mu(a)mu(b)/mu(ab), mu valued in Z_{2L}.
bool is_coboundary(const Cocycle& alpha);

}  // namespace gauge

#endif

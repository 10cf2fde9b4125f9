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

#include "gauge/group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

int64_t mod(int64_t a, int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

std::string exps_str(const Exps& e) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

void check_exps(const GroupSpec& g, const Exps& e) {
    if (!g.contains(e)) throw SpecError("exponent tuple " + exps_str(e) + " not in group " + g.str());
}

}  // namespace

// ---------------------------------------------------------------- Phase

Phase::Phase(int64_t k, int64_t L) : k_(0), L_(L) {
    if (L < 1) throw SpecError("phase modulus must be positive");
    k_ = mod(k, L);
}

Phase Phase::operator*(const Phase& o) const {
    if (L_ == o.L_) return Phase(k_ + o.k_, L_);
    int64_t L = std::lcm(L_, o.L_);
    return Phase(k_ * (L / L_) + o.k_ * (L / o.L_), L);
}

Phase Phase::with_modulus(int64_t L) const {
    if (L % L_ != 0) throw SpecError("phase modulus is not a multiple");
    return Phase(k_ * (L / L_), L);
}

bool Phase::operator==(const Phase& o) const {
    // Compare as fractions k/L.
    return k_ * o.L_ == o.k_ * L_;
}

std::complex<double> Phase::value() const {
    double a = 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(L_);
    return {std::cos(a), std::sin(a)};
}

std::string Phase::str() const { return "exp(2pi i " + std::to_string(k_) + "/" + std::to_string(L_) + ")"; }

// ---------------------------------------------------------------- GroupSpec

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw SpecError("group needs at least one cyclic factor");
    for (int n : orders_) {
        if (n < 2) throw SpecError("cyclic orders must be >= 2");
    }
    strides_.assign(orders_.size(), 1);
    order_ = 1;
    L_ = 1;
    for (int i = rank() - 1; i >= 0; --i) {
        strides_[i] = order_;
        order_ *= orders_[i];
        L_ = std::lcm(L_, orders_[i]);
    }
}

bool GroupSpec::contains(const Exps& e) const {
    if (static_cast<int>(e.size()) != rank()) return false;
    for (int i = 0; i < rank(); ++i) {
        if (e[i] < 0 || e[i] >= orders_[i]) return false;
    }
    return true;
}

int GroupSpec::index_of(const Exps& e) const {
    int idx = 0;
    for (int i = 0; i < rank(); ++i) idx += e[i] * strides_[i];
    return idx;
}

Exps GroupSpec::exps_at(int index) const {
    Exps e(rank());
    for (int i = 0; i < rank(); ++i) {
        e[i] = (index / strides_[i]) % orders_[i];
    }
    return e;
}

int GroupSpec::mul_index(int a, int b) const {
    int idx = 0;
    for (int i = 0; i < rank(); ++i) {
        int x = (a / strides_[i]) % orders_[i] + (b / strides_[i]) % orders_[i];
        if (x >= orders_[i]) x -= orders_[i];
        idx += x * strides_[i];
    }
    return idx;
}

int GroupSpec::inv_index(int a) const {
    int idx = 0;
    for (int i = 0; i < rank(); ++i) {
        int x = (a / strides_[i]) % orders_[i];
        idx += ((orders_[i] - x) % orders_[i]) * strides_[i];
    }
    return idx;
}

int GroupSpec::pair_index(int chi, int g) const {
    int64_t k = 0;
    for (int i = 0; i < rank(); ++i) {
        int c = (chi / strides_[i]) % orders_[i];
        int x = (g / strides_[i]) % orders_[i];
        k += static_cast<int64_t>(c) * x * (L_ / orders_[i]);
    }
    return static_cast<int>(k % L_);
}

std::string GroupSpec::str() const {
    std::ostringstream os;
    for (int i = 0; i < rank(); ++i) os << (i ? "x" : "") << "Z" << orders_[i];
    return os.str();
}

// ---------------------------------------------------------------- elements

GroupElement::GroupElement(GroupSpec g, Exps exps) : group_(std::move(g)), exps_(std::move(exps)) {
    check_exps(group_, exps_);
}

GroupElement GroupElement::identity(const GroupSpec& g) { return GroupElement(g, Exps(g.rank(), 0)); }

GroupElement GroupElement::from_index(const GroupSpec& g, int index) {
    if (index < 0 || index >= g.order()) throw SpecError("element index out of range");
    return GroupElement(g, g.exps_at(index));
}

bool GroupElement::is_identity() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int x) { return x == 0; });
}

bool GroupElement::operator==(const GroupElement& o) const { return group_ == o.group_ && exps_ == o.exps_; }

std::string GroupElement::str() const { return exps_str(exps_); }

DualCharacter::DualCharacter(GroupSpec g, Exps exps) : group_(std::move(g)), exps_(std::move(exps)) {
    check_exps(group_, exps_);
}

DualCharacter DualCharacter::trivial(const GroupSpec& g) { return DualCharacter(g, Exps(g.rank(), 0)); }

DualCharacter DualCharacter::from_index(const GroupSpec& g, int index) {
    if (index < 0 || index >= g.order()) throw SpecError("character index out of range");
    return DualCharacter(g, g.exps_at(index));
}

bool DualCharacter::is_trivial() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int x) { return x == 0; });
}

bool DualCharacter::operator==(const DualCharacter& o) const { return group_ == o.group_ && exps_ == o.exps_; }

std::string DualCharacter::str() const { return "^" + exps_str(exps_); }

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (a.group() != b.group()) throw SpecError("compose: mismatched groups");
    Exps e(a.exps().size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = (a.exps()[i] + b.exps()[i]) % a.group().orders()[i];
    return GroupElement(a.group(), e);
}

GroupElement inverse(const GroupElement& a) {
    Exps e(a.exps().size());
    for (size_t i = 0; i < e.size(); ++i) {
        int n = a.group().orders()[i];
        e[i] = (n - a.exps()[i]) % n;
    }
    return GroupElement(a.group(), e);
}

DualCharacter compose(const DualCharacter& a, const DualCharacter& b) {
    if (a.group() != b.group()) throw SpecError("compose: mismatched groups");
    Exps e(a.exps().size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = (a.exps()[i] + b.exps()[i]) % a.group().orders()[i];
    return DualCharacter(a.group(), e);
}

DualCharacter inverse(const DualCharacter& a) {
    Exps e(a.exps().size());
    for (size_t i = 0; i < e.size(); ++i) {
        int n = a.group().orders()[i];
        e[i] = (n - a.exps()[i]) % n;
    }
    return DualCharacter(a.group(), e);
}

Phase pair(const DualCharacter& chi, const GroupElement& g) {
    if (chi.group() != g.group()) throw SpecError("pair: mismatched groups");
    const GroupSpec& G = g.group();
    return Phase(G.pair_index(chi.index(), g.index()), G.phase_modulus());
}

std::vector<GroupElement> elements(const GroupSpec& g) {
    std::vector<GroupElement> out;
    out.reserve(g.order());
    for (int i = 0; i < g.order(); ++i) out.push_back(GroupElement::from_index(g, i));
    return out;
}

std::vector<DualCharacter> characters(const GroupSpec& g) {
    std::vector<DualCharacter> out;
    out.reserve(g.order());
    for (int i = 0; i < g.order(); ++i) out.push_back(DualCharacter::from_index(g, i));
    return out;
}

GroupElement as_dual_group_element(const DualCharacter& chi) { return GroupElement(chi.group(), chi.exps()); }

DualCharacter as_character_of_dual(const GroupElement& g) { return DualCharacter(g.group(), g.exps()); }

// ---------------------------------------------------------------- subgroups

std::vector<int> generated_subgroup(const GroupSpec& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> members{0};
    in[0] = 1;
    for (size_t pos = 0; pos < members.size(); ++pos) {
        for (int s : gens) {
            int c = g.mul_index(members[pos], s);
            if (!in[c]) {
                in[c] = 1;
                members.push_back(c);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> generating_set(const GroupSpec& g, const std::vector<int>& subgroup) {
    std::vector<int> gens;
    std::vector<int> span{0};
    for (int x : subgroup) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = generated_subgroup(g, gens);
    }
    return gens;
}

bool is_subgroup(const GroupSpec& g, const std::vector<GroupElement>& h) {
    std::set<int> s;
    for (const auto& x : h) {
        if (x.group() != g) return false;
        s.insert(x.index());
    }
    if (!s.count(0)) return false;
    for (int a : s) {
        for (int b : s) {
            if (!s.count(g.mul_index(a, b))) return false;
        }
    }
    return true;
}

std::vector<DualCharacter> restriction_kernel(const GroupSpec& g, const std::vector<GroupElement>& h) {
    if (!is_subgroup(g, h)) throw SpecError("restriction_kernel: not a subgroup");
    std::vector<DualCharacter> out;
    for (int chi = 0; chi < g.order(); ++chi) {
        bool trivial = true;
        for (const auto& x : h) {
            if (g.pair_index(chi, x.index()) != 0) {
                trivial = false;
                break;
            }
        }
        if (trivial) out.push_back(DualCharacter::from_index(g, chi));
    }
    return out;
}

std::vector<std::vector<GroupElement>> enumerate_subgroups(const GroupSpec& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{{0}};
    seen.insert({0});
    // Every subgroup of a finite group is reached by adding one generator at a time.
    for (size_t pos = 0; pos < frontier.size(); ++pos) {
        for (int x = 0; x < g.order(); ++x) {
            if (std::binary_search(frontier[pos].begin(), frontier[pos].end(), x)) continue;
            auto gens = frontier[pos];
            gens.push_back(x);
            auto sub = generated_subgroup(g, gens);
            if (seen.insert(sub).second) frontier.push_back(sub);
        }
    }
    std::vector<std::vector<int>> all(seen.begin(), seen.end());
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::vector<GroupElement>> out;
    for (const auto& s : all) {
        std::vector<GroupElement> h;
        for (int i : s) h.push_back(GroupElement::from_index(g, i));
        out.push_back(h);
    }
    return out;
}

// ---------------------------------------------------------------- cocycles

Cocycle::Cocycle(GroupSpec g, std::vector<int> upper) : group_(std::move(g)), upper_(std::move(upper)) {
    int k = group_.rank();
    if (static_cast<int>(upper_.size()) != k * (k - 1) / 2) {
        throw SpecError("cocycle for " + group_.str() + " needs " + std::to_string(k * (k - 1) / 2) +
                        " upper-triangular entries");
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int v = p(i, j);
            int gij = std::gcd(group_.orders()[i], group_.orders()[j]);
            if (v < 0 || v >= gij) {
                throw SpecError("cocycle entry p" + std::to_string(i + 1) + std::to_string(j + 1) +
                                " must lie in [0," + std::to_string(gij) + ")");
            }
        }
    }
    int n = group_.order();
    int L = group_.phase_modulus();
    table_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        Exps ea = group_.exps_at(a);
        for (int b = 0; b < n; ++b) {
            Exps eb = group_.exps_at(b);
            int64_t s = 0;
            for (int i = 0; i < k; ++i) {
                for (int j = i + 1; j < k; ++j) {
                    int gij = std::gcd(group_.orders()[i], group_.orders()[j]);
                    s += static_cast<int64_t>(p(i, j)) * ea[j] * eb[i] * (L / gij);
                }
            }
            table_[a * n + b] = static_cast<int>(s % L);
        }
    }
}

Cocycle Cocycle::trivial(const GroupSpec& g) {
    int k = g.rank();
    return Cocycle(g, std::vector<int>(k * (k - 1) / 2, 0));
}

int Cocycle::p(int i, int j) const {
    int k = group_.rank();
    if (!(0 <= i && i < j && j < k)) throw SpecError("cocycle index out of range");
    // row-major offset of (i,j) among strictly upper entries
    int off = i * k - i * (i + 1) / 2 + (j - i - 1);
    return upper_[off];
}

bool Cocycle::is_trivial() const {
    return std::all_of(upper_.begin(), upper_.end(), [](int x) { return x == 0; });
}

Phase Cocycle::operator()(const GroupElement& a, const GroupElement& b) const {
    if (a.group() != group_ || b.group() != group_) throw SpecError("cocycle: element from another group");
    return Phase(exponent(a.index(), b.index()), group_.phase_modulus());
}

std::string Cocycle::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < upper_.size(); ++i) os << (i ? "," : "") << upper_[i];
    os << "]";
    return os.str();
}

DualCharacter slant_product(const Cocycle& alpha, const GroupElement& g) {
    const GroupSpec& G = alpha.group();
    if (g.group() != G) throw SpecError("slant_product: element from another group");
    int k = G.rank();
    const auto& n = G.orders();
    // Closed form for the bilinear representative.
    Exps chi(k, 0);
    for (int c = 0; c < k; ++c) {
        int64_t acc = 0;
        for (int j = c + 1; j < k; ++j) {
            int gcj = std::gcd(n[c], n[j]);
            acc += static_cast<int64_t>(alpha.p(c, j)) * g.exps()[j] * (n[c] / gcj);
        }
        for (int i = 0; i < c; ++i) {
            int gic = std::gcd(n[i], n[c]);
            acc -= static_cast<int64_t>(alpha.p(i, c)) * g.exps()[i] * (n[c] / gic);
        }
        chi[c] = static_cast<int>(mod(acc, n[c]));
    }
    DualCharacter result(G, chi);
    // Brute-force confirmation against alpha(g,h)/alpha(h,g).
    int L = G.phase_modulus();
    int gi = g.index();
    for (int h = 0; h < G.order(); ++h) {
        int64_t ratio = mod(alpha.exponent(gi, h) - alpha.exponent(h, gi), L);
        if (ratio != G.pair_index(result.index(), h)) {
            throw InternalConsistencyError("slant product is not a character for cocycle " + alpha.str());
        }
    }
    return result;
}

std::vector<Cocycle> enumerate_cocycle_classes(const GroupSpec& g) {
    int k = g.rank();
    std::vector<int> ranges;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) ranges.push_back(std::gcd(g.orders()[i], g.orders()[j]));
    }
    std::vector<Cocycle> out;
    std::vector<int> cur(ranges.size(), 0);
    while (true) {
        out.emplace_back(g, cur);
        // odometer, last entry fastest
        int pos = static_cast<int>(cur.size()) - 1;
        while (pos >= 0 && ++cur[pos] == ranges[pos]) {
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

bool satisfies_cocycle_condition(const Cocycle& alpha) {
    const GroupSpec& G = alpha.group();
    int n = G.order();
    int L = G.phase_modulus();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                int64_t lhs = alpha.exponent(a, b) + alpha.exponent(G.mul_index(a, b), c);
                int64_t rhs = alpha.exponent(b, c) + alpha.exponent(a, G.mul_index(b, c));
                if (mod(lhs - rhs, L) != 0) return false;
            }
        }
    }
    return true;
}

bool is_coboundary(const Cocycle& alpha) {
    const GroupSpec& G = alpha.group();
    int n = G.order();
    int L = G.phase_modulus();
    int m = 2 * L;
    // alpha exponents lifted to Z_m.
    std::vector<int> target(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) target[a * n + b] = alpha.exponent(a, b) * 2;
    }
    std::vector<int> mu(n, 0);
    std::function<bool(int)> search = [&](int pos) -> bool {
        if (pos == n) {
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (mod(mu[a] + mu[b] - mu[G.mul_index(a, b)] - target[a * n + b], m) != 0) return false;
                }
            }
            return true;
        }
        for (int v = 0; v < m; ++v) {
            mu[pos] = v;
            // prune: any pair fully assigned must already match
            bool ok = true;
            for (int a = 0; a <= pos && ok; ++a) {
                for (int b = 0; b <= pos && ok; ++b) {
                    int c = G.mul_index(a, b);
                    if (c <= pos && mod(mu[a] + mu[b] - mu[c] - target[a * n + b], m) != 0) ok = false;
                }
            }
            if (ok && search(pos + 1)) return true;
        }
        return false;
    };
    return search(0);
}

}  // namespace gauge

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


#include "gauge/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gauge/errors.hpp"

namespace gauge {

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = static_cast<int>(table.size());
    if (g.n_ == 0) throw SpecError("group table is empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != g.n_) throw SpecError("group table is not square");
        for (int v : row) {
            if (v < 0 || v >= g.n_) throw SpecError("group table entry out of range");
            g.table_.push_back(v);
        }
    }
    const int n = g.n_;
    g.e_ = -1;
    for (int a = 0; a < n && g.e_ < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
        if (ok) g.e_ = a;
    }
    if (g.e_ < 0) throw SpecError("group table has no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw SpecError("group table is not associative");
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.e_ && g.mul(b, a) == g.e_) g.inv_[a] = b;
    if (std::count(g.inv_.begin(), g.inv_.end(), -1) > 0) throw SpecError("group table lacks inverses");
    return g;
}

FiniteGroup FiniteGroup::from_abelian(const GroupSpec& G) {
    std::vector<std::vector<int>> t(G.order(), std::vector<int>(G.order()));
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) t[a][b] = G.mul_index(a, b);
    return from_table(G.str(), t);
}

FiniteGroup FiniteGroup::s3() {
    using P = std::array<int, 3>;
    const std::vector<P> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            // (ab)(x) = a(b(x)).
            P c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
            t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return from_table("S3", t);
}

bool FiniteGroup::abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::conjugacy_classes() const {
    std::vector<int> id(n_, -1);
    int next = 0;
    for (int a = 0; a < n_; ++a) {
        if (id[a] >= 0) continue;
        for (int h = 0; h < n_; ++h) id[mul(mul(h, a), inv(h))] = next;
        ++next;
    }
    return id;
}

void check_class_function(const FiniteGroup& g, const ClassFunction& chi) {
    if (static_cast<int>(chi.values.size()) != g.order())
        throw SpecError("class function " + chi.name + ": needs one value per element");
    for (int a = 0; a < g.order(); ++a)
        for (int h = 0; h < g.order(); ++h)
            if (chi.values[g.mul(g.mul(h, a), g.inv(h))] != chi.values[a])
                throw SpecError("'" + chi.name + "' is not a class function");
}

std::vector<ClassFunction> s3_characters() {
    // Element order as in FiniteGroup::s3(): e, three transpositions, two 3-cycles.
    auto row = [](std::string name, std::vector<int> v) {
        ClassFunction c{std::move(name), 1, {}};
        for (int x : v) c.values.push_back(Cyclotomic::integer(1, x));
        return c;
    };
    return {row("trivial", {1, 1, 1, 1, 1, 1}), row("sign", {1, -1, -1, -1, 1, 1}), row("standard", {2, 0, 0, 0, -1, -1})};
}

std::vector<ClassFunction> abelian_characters(const GroupSpec& G) {
    std::vector<ClassFunction> out;
    const int L = G.phase_modulus();
    for (const auto& chi : characters(G)) {
        ClassFunction c{chi.str(), L, {}};
        for (int g = 0; g < G.order(); ++g) c.values.push_back(Cyclotomic::root(L, G.pair_index(chi.index(), g)));
        out.push_back(std::move(c));
    }
    return out;
}

DiagonalOperator DiagonalOperator::operator*(const DiagonalOperator& o) const {
    if (sites != o.sites || dim != o.dim) throw SpecError("diagonal operators on different spaces");
    DiagonalOperator r = *this;
    for (size_t i = 0; i < diag.size(); ++i) r.diag[i] = diag[i] * o.diag[i];
    return r;
}

DiagonalOperator DiagonalOperator::operator+(const DiagonalOperator& o) const {
    if (sites != o.sites || dim != o.dim) throw SpecError("diagonal operators on different spaces");
    DiagonalOperator r = *this;
    for (size_t i = 0; i < diag.size(); ++i) r.diag[i] += o.diag[i];
    return r;
}

DiagonalOperator DiagonalOperator::scaled(int64_t s) const {
    DiagonalOperator r = *this;
    for (auto& v : r.diag) v = v.scaled(s);
    return r;
}

bool DiagonalOperator::operator==(const DiagonalOperator& o) const {
    return sites == o.sites && dim == o.dim && diag == o.diag;
}

bool DiagonalOperator::equals(const ProductOperator& op) const {
    std::vector<int> digits(sites);
    for (size_t i = 0; i < diag.size(); ++i) {
        size_t r = i;
        for (int s = sites - 1; s >= 0; --s) {
            digits[s] = static_cast<int>(r % dim);
            r /= dim;
        }
        int L = 1;
        for (const auto& [s, f] : op.factors()) {
            if (s < 0 || s >= sites || f.dim() != dim) return false;
            L = std::lcm(L, f.modulus());
        }
        const int Lc = diag[i].modulus() > 0 ? std::lcm(L, diag[i].modulus()) : L;
        auto d = digits;
        int k = basis_action(op, d, Lc);
        if (d != digits) return false;
        // diag[i] == w_Lc^k, compared in Z[w_Lc].
        Cyclotomic want = Cyclotomic::root(Lc, k);
        Cyclotomic got(Lc);
        const int m = diag[i].modulus() > 0 ? diag[i].modulus() : 1;
        for (int j = 0; j < static_cast<int>(diag[i].coeffs().size()); ++j)
            got.add_root(static_cast<int64_t>(j) * (Lc / m), diag[i].coeffs()[j]);
        if (got != want) return false;
    }
    return true;
}

DiagonalOperator irrep_flux_operator(const FiniteGroup& g, const ClassFunction& chi, int n) {
    check_class_function(g, chi);
    if (n < 1) throw SpecError("irrep_flux_operator: needs n >= 1");
    DiagonalOperator op{n, g.order(), {}};
    size_t total = 1;
    for (int s = 0; s < n; ++s) total *= g.order();
    op.diag.reserve(total);
    std::vector<int> digits(n, 0);
    for (size_t i = 0; i < total; ++i) {
        int prod = g.identity();
        for (int s = 0; s < n; ++s) prod = g.mul(prod, digits[s]);
        op.diag.push_back(chi.values[prod]);
        for (int s = n - 1; s >= 0 && ++digits[s] == g.order(); --s) digits[s] = 0;
    }
    return op;
}

std::vector<int64_t> fusion_coefficients(const FiniteGroup& g, const std::vector<ClassFunction>& table, int sigma,
                                         int rho) {
    std::vector<int64_t> out;
    for (const auto& gamma : table) {
        Cyclotomic s;
        for (int a = 0; a < g.order(); ++a)
            s += table.at(sigma).values[a] * table.at(rho).values[a] * gamma.values[a].conj();
        auto v = s.as_integer();
        if (!v || *v % g.order() != 0)
            throw SpecError("fusion_coefficients: the table is not a set of irreducible characters");
        out.push_back(static_cast<int64_t>(*v / g.order()));
    }
    return out;
}

std::vector<FusionCheck> verify_fusion(const FiniteGroup& g, const std::vector<ClassFunction>& table, int n) {
    std::vector<DiagonalOperator> gam;
    for (const auto& c : table) gam.push_back(irrep_flux_operator(g, c, n));
    std::vector<FusionCheck> out;
    for (int s = 0; s < static_cast<int>(table.size()); ++s)
        for (int r = 0; r < static_cast<int>(table.size()); ++r) {
            FusionCheck c{s, r, fusion_coefficients(g, table, s, r), false};
            DiagonalOperator rhs{n, g.order(), std::vector<Cyclotomic>(gam[0].diag.size())};
            for (size_t k = 0; k < table.size(); ++k)
                if (c.coefficients[k] != 0) rhs = rhs + gam[k].scaled(c.coefficients[k]);
            c.holds = gam[s] * gam[r] == rhs;
            out.push_back(std::move(c));
        }
    return out;
}

std::vector<int> zero_flux_configuration(const FiniteGroup& g, const std::vector<int>& matter) {
    const int n = static_cast<int>(matter.size());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = g.mul(matter[i], g.inv(matter[(i + 1) % n]));
    return out;
}

}  // namespace gauge

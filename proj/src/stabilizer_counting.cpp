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

// Closed-form evaluation of the trace sum for codes built from Weyl-type
// monomials (translation times character times scalar). For such operators
// tr(S) vanishes unless S is a scalar, so
//   |K|^-1 sum_a tr prod_p S_p(a_p) = D / |S|   if S contains no scalar != 1,
// and 0 otherwise, with |S| the order of the image modulo scalars.

#include <algorithm>
#include <map>
#include <numeric>

#include "gauge/errors.hpp"
#include "gauge/lattice.hpp"

namespace gauge {

namespace {

int64_t mod(int64_t a, int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// Integer extended gcd: s*a + t*b = g.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& s, int64_t& t) {
    int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    s = s0;
    t = t0;
    return r0;
}

// Unit u mod L with u*a = gcd(a, L) mod L.
int64_t normalizing_unit(int64_t a, int64_t L) {
    int64_t g = std::gcd(a, L);
    for (int64_t u = 1; u < L; ++u) {
        if (std::gcd(u, L) == 1 && mod(u * a, L) == g) return u;
    }
    return 1;
}

// Translation exps and character exps of a Weyl-type site operator.
bool weyl_parts(const MonomialOperator& m, const GroupSpec& G, Exps& t, Exps& chi) {
    const int L = G.phase_modulus();
    int shift = m.perm()[0];
    for (int h = 0; h < G.order(); ++h) {
        if (m.perm()[h] != G.mul_index(shift, h)) return false;
    }
    t = G.exps_at(shift);
    int theta = m.phases()[0];
    chi.assign(G.rank(), 0);
    for (int i = 0; i < G.rank(); ++i) {
        Exps e(G.rank(), 0);
        e[i] = 1;
        int64_t diff = mod(m.phases()[G.index_of(e)] - theta, L);
        int unit = L / G.orders()[i];
        if (diff % unit) return false;
        chi[i] = static_cast<int>(diff / unit);
    }
    int chi_idx = G.index_of(chi);
    for (int h = 0; h < G.order(); ++h) {
        if (mod(m.phases()[h] - theta, L) != G.pair_index(chi_idx, h)) return false;
    }
    return true;
}

int element_order(const GroupSpec& G, int a) {
    int k = 1, x = a;
    while (x != 0) {
        x = G.mul_index(x, a);
        ++k;
    }
    return k;
}

}  // namespace

namespace {

// The pivot orders L/d whose product is the submodule order. Kept as a list
// because the product can pass 2^64 on large lattices.
std::vector<int> submodule_factors(std::vector<std::vector<int>> rows, int L, int kernel_width,
                                   std::vector<std::vector<int>>* kernel_rows) {
    std::vector<int> factors;
    if (rows.empty()) {
        if (kernel_rows) kernel_rows->clear();
        return factors;
    }
    const int width = static_cast<int>(rows[0].size());
    const int reduce = width - kernel_width;
    for (auto& r : rows) {
        for (auto& v : r) v = static_cast<int>(mod(v, L));
    }
    std::vector<std::vector<int>> pool = std::move(rows);
    auto axpy = [&](std::vector<int>& out, int64_t a, const std::vector<int>& x, int64_t b, const std::vector<int>& y) {
        for (int c = 0; c < width; ++c) out[c] = static_cast<int>(mod(a * x[c] + b * y[c], L));
    };
    for (int col = 0; col < reduce; ++col) {
        std::vector<int> pivot;
        bool have = false;
        std::vector<std::vector<int>> rest;
        for (auto& r : pool) {
            if (r[col] == 0) {
                rest.push_back(std::move(r));
                continue;
            }
            if (!have) {
                pivot = std::move(r);
                have = true;
                continue;
            }
            int64_t a = pivot[col], b = r[col], s, t;
            int64_t g = ext_gcd(a, b, s, t);
            std::vector<int> np(width), nr(width);
            axpy(np, s, pivot, t, r);
            axpy(nr, -b / g, pivot, a / g, r);
            pivot = std::move(np);
            rest.push_back(std::move(nr));
        }
        pool = std::move(rest);
        if (!have) continue;
        int64_t u = normalizing_unit(pivot[col], L);
        for (auto& v : pivot) v = static_cast<int>(mod(u * v, L));
        int64_t d = pivot[col];
        if (d == 0) continue;
        factors.push_back(static_cast<int>(L / d));
        // Howell closure: (L/d) * pivot vanishes in this column but maybe not later.
        std::vector<int> extra(width);
        for (int c = 0; c < width; ++c) extra[c] = static_cast<int>(mod((L / d) * pivot[c], L));
        if (std::any_of(extra.begin(), extra.end(), [](int v) { return v != 0; })) pool.push_back(std::move(extra));
    }
    if (kernel_rows) {
        kernel_rows->clear();
        for (auto& r : pool) {
            bool nonzero = false;
            for (int c = reduce; c < width; ++c) nonzero |= r[c] != 0;
            if (nonzero) kernel_rows->push_back(std::vector<int>(r.begin() + reduce, r.end()));
        }
    }
    return factors;
}

void add_prime_exponents(int64_t v, int sign, std::map<int64_t, int64_t>& e) {
    for (int64_t p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            e[p] += sign;
            v /= p;
        }
    if (v > 1) e[v] += sign;
}

}  // namespace

uint64_t submodule_order(std::vector<std::vector<int>> rows, int L, int kernel_width,
                         std::vector<std::vector<int>>* kernel_rows) {
    uint64_t order = 1;
    for (int f : submodule_factors(std::move(rows), L, kernel_width, kernel_rows)) {
        if (order > UINT64_MAX / static_cast<uint64_t>(f)) throw CapExceeded("submodule order exceeds 2^64");
        order *= static_cast<uint64_t>(f);
    }
    return order;
}

DimensionResult group_counting_dimension(const std::vector<Plaquette>& plaquettes, const GroupSpec& site_group,
                                         int site_count) {
    const GroupSpec& G = site_group;
    const int L = G.phase_modulus();
    const int r = G.rank();
    const int width = site_count * 2 * r;
    struct Gen {
        int plaquette;
        int pos;
        int order;
    };
    std::vector<Gen> gens;
    for (int p = 0; p < static_cast<int>(plaquettes.size()); ++p) {
        const auto& pl = plaquettes[p];
        if (pl.group.order() != G.order()) throw SpecError("plaquette group differs from site group");
        for (int g : generating_set(pl.group, pl.elements)) {
            auto it = std::find(pl.elements.begin(), pl.elements.end(), g);
            gens.push_back({p, static_cast<int>(it - pl.elements.begin()), element_order(pl.group, g)});
        }
    }
    const int q = static_cast<int>(gens.size());
    std::vector<std::vector<int>> rows;
    for (int k = 0; k < q; ++k) {
        std::vector<int> row(width + q, 0);
        const auto& op = plaquettes[gens[k].plaquette].ops[gens[k].pos];
        for (const auto& [site, m] : op.factors()) {
            Exps t, chi;
            if (!weyl_parts(m, G, t, chi)) {
                throw SpecError("group counting needs Weyl-type plaquette operators");
            }
            for (int i = 0; i < r; ++i) {
                int unit = L / G.orders()[i];
                row[site * 2 * r + i] = t[i] * unit;
                row[site * 2 * r + r + i] = chi[i] * unit;
            }
        }
        row[width + k] = 1;
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<int>> kernel;
    std::vector<int> image = submodule_factors(rows, L, q, &kernel);
    // Relations must multiply to the identity, not to another scalar.
    bool scalar_free = true;
    for (const auto& rel : kernel) {
        ProductOperator prod;
        for (int k = 0; k < q; ++k) {
            int e = static_cast<int>(mod(rel[k], gens[k].order));
            const auto& op = plaquettes[gens[k].plaquette].ops[gens[k].pos];
            for (int i = 0; i < e; ++i) prod = op * prod;
        }
        auto s = prod.scalar();
        if (!s) throw InternalConsistencyError("relation of the stabilizer group is not a scalar");
        if (!s->is_one()) {
            scalar_free = false;
            break;
        }
    }
    DimensionResult res;
    res.method = DimensionMethod::GroupCounting;
    if (!scalar_free) {
        res.dimension = 0;
        return res;
    }
    // dimension = |G|^sites / |S|, cancelled prime by prime
    std::map<int64_t, int64_t> e;
    for (int s = 0; s < site_count; ++s) add_prime_exponents(G.order(), +1, e);
    for (int f : image) add_prime_exponents(f, -1, e);
    uint64_t dim = 1;
    for (const auto& [p, k] : e) {
        if (k < 0) throw InternalConsistencyError("stabilizer group order does not divide the dimension");
        for (int64_t i = 0; i < k; ++i) {
            if (dim > UINT64_MAX / static_cast<uint64_t>(p)) throw CapExceeded("ground space dimension exceeds 2^64");
            dim *= static_cast<uint64_t>(p);
        }
    }
    res.dimension = dim;
    return res;
}

}  // namespace gauge

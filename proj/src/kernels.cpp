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

#include "gauge/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

namespace gauge::kernels {

namespace {

int g_threads = 0;

inline size_t map_index(const CompiledOperator& op, size_t x, cplx& phase) {
    size_t y = x;
    phase = 1.0;
    for (const auto& f : op.factors) {
        int d = static_cast<int>((x / f.stride) % f.dim);
        y += (static_cast<int64_t>(f.perm[d]) - d) * static_cast<int64_t>(f.stride);
        phase *= f.phase[d];
    }
    return y;
}

}  // namespace

void set_threads(int n) { g_threads = n; }
int threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

CompiledOperator compile(const ProductOperator& op, const StateVector& layout) {
    CompiledOperator c;
    for (const auto& [site, m] : op.factors()) {
        if (m.is_identity()) continue;
        CompiledFactor f;
        f.stride = layout.stride(site);
        f.dim = m.dim();
        f.perm = m.perm();
        f.phase.resize(m.dim());
        for (int b = 0; b < m.dim(); ++b) {
            double a = 2.0 * std::numbers::pi * m.phases()[b] / m.modulus();
            f.phase[b] = cplx(std::cos(a), std::sin(a));
        }
        c.factors.push_back(std::move(f));
    }
    return c;
}

namespace serial {

void apply(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out) {
    out.assign(in.size(), 0.0);
    for (size_t x = 0; x < in.size(); ++x) {
        cplx ph;
        size_t y = map_index(op, x, ph);
        out[y] = ph * in[x];
    }
}

void apply_accumulate(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out, cplx coeff) {
    for (size_t x = 0; x < in.size(); ++x) {
        cplx ph;
        size_t y = map_index(op, x, ph);
        out[y] += coeff * ph * in[x];
    }
}

cplx expectation(const CompiledOperator& op, const std::vector<cplx>& in) {
    cplx s = 0;
    for (size_t x = 0; x < in.size(); ++x) {
        cplx ph;
        size_t y = map_index(op, x, ph);
        s += std::conj(in[y]) * ph * in[x];
    }
    return s;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s = 0;
    for (size_t x = 0; x < a.size(); ++x) s += std::conj(a[x]) * b[x];
    return s;
}

}  // namespace serial

namespace parallel {

void apply(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out) {
    out.assign(in.size(), 0.0);
    const int64_t n = static_cast<int64_t>(in.size());
#pragma omp parallel for schedule(static) num_threads(threads())
    for (int64_t x = 0; x < n; ++x) {
        cplx ph;
        size_t y = map_index(op, x, ph);
        out[y] = ph * in[x];
    }
}

void apply_accumulate(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out, cplx coeff) {
    const int64_t n = static_cast<int64_t>(in.size());
    // x -> y is a bijection, so writes never collide.
#pragma omp parallel for schedule(static) num_threads(threads())
    for (int64_t x = 0; x < n; ++x) {
        cplx ph;
        size_t y = map_index(op, x, ph);
        out[y] += coeff * ph * in[x];
    }
}

namespace {

template <typename F>
cplx blocked_sum(size_t n, F term) {
    const int64_t blocks = static_cast<int64_t>((n + kReductionBlock - 1) / kReductionBlock);
    std::vector<cplx> partial(blocks, 0.0);
#pragma omp parallel for schedule(static) num_threads(threads())
    for (int64_t b = 0; b < blocks; ++b) {
        size_t lo = b * kReductionBlock;
        size_t hi = std::min(n, lo + kReductionBlock);
        cplx s = 0;
        for (size_t x = lo; x < hi; ++x) s += term(x);
        partial[b] = s;
    }
    cplx total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace

cplx expectation(const CompiledOperator& op, const std::vector<cplx>& in) {
    return blocked_sum(in.size(), [&](size_t x) {
        cplx ph;
        size_t y = map_index(op, x, ph);
        return std::conj(in[y]) * ph * in[x];
    });
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return blocked_sum(a.size(), [&](size_t x) { return std::conj(a[x]) * b[x]; });
}

}  // namespace parallel

}  // namespace gauge::kernels

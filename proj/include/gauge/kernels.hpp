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

#ifndef GAUGE_KERNELS_HPP
#define GAUGE_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "gauge/operators.hpp"

namespace gauge::kernels {

/// A product operator laid out against a state's strides.
struct CompiledFactor {
    size_t stride;
    int dim;
    std::vector<int> perm;
    std::vector<cplx> phase;
};
struct CompiledOperator {
    std::vector<CompiledFactor> factors;
};

CompiledOperator compile(const ProductOperator& op, const StateVector& layout);

/// Reductions are split into fixed blocks of this many amplitudes whose
/// partial sums are combined in block order, so results do not depend on the
/// thread count.
inline constexpr size_t kReductionBlock = size_t(1) << 12;

// Reference implementations, single threaded.
namespace serial {
/// out = op * in (out must be zero-initialized or is overwritten entirely).
void apply(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out);
/// out += coeff * op * in.
void apply_accumulate(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out, cplx coeff);
/// <in| op |in>.
cplx expectation(const CompiledOperator& op, const std::vector<cplx>& in);
cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);
}  // namespace serial

// OpenMP versions; same results as serial up to floating point reassociation.
namespace parallel {
void apply(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out);
void apply_accumulate(const CompiledOperator& op, const std::vector<cplx>& in, std::vector<cplx>& out, cplx coeff);
cplx expectation(const CompiledOperator& op, const std::vector<cplx>& in);
cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);
}  // namespace parallel

/// Worker count for the parallel kernels (0 leaves the OpenMP default).
void set_threads(int n);
int threads();

}  // namespace gauge::kernels

#endif

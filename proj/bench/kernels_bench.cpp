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


// Serial reference vs OpenMP kernels. Arg 0 selects serial (0) or parallel (1).

#include <benchmark/benchmark.h>

#include <random>

#include "gauge/gauging.hpp"
#include "gauge/kernels.hpp"
#include "gauge/lattice.hpp"
#include "gauge/tensor_network.hpp"

using namespace gauge;

namespace {

// 12 Z3 sites, about half a million amplitudes.
StateVector random_state(int sites, int d) {
    StateVector s(std::vector<SiteKind>(sites, SiteKind::EdgeGroup), std::vector<int>(sites, d));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    for (auto& a : s.amps()) a = {nd(rng), nd(rng)};
    s.normalize();
    return s;
}

ProductOperator plaquette_like(const GroupSpec& g) {
    auto x = shift_x(GroupElement::from_index(g, 1));
    auto z = clock_z(DualCharacter::from_index(g, 1));
    ProductOperator op(0, x);
    op.times(5, x.adjoint());
    op.times(2, z);
    op.times(11, z.adjoint());
    return op;
}

void BM_apply(benchmark::State& st) {
    GroupSpec g({3});
    auto psi = random_state(12, 3);
    auto op = kernels::compile(plaquette_like(g), psi);
    std::vector<cplx> out(psi.amps().size());
    for (auto _ : st) {
        if (st.range(0))
            kernels::parallel::apply(op, psi.amps(), out);
        else
            kernels::serial::apply(op, psi.amps(), out);
        benchmark::DoNotOptimize(out.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(out.size()));
}
BENCHMARK(BM_apply)->Arg(0)->Arg(1);

void BM_expectation(benchmark::State& st) {
    GroupSpec g({3});
    auto psi = random_state(12, 3);
    auto op = kernels::compile(plaquette_like(g), psi);
    for (auto _ : st) {
        cplx v = st.range(0) ? kernels::parallel::expectation(op, psi.amps()) : kernels::serial::expectation(op, psi.amps());
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_expectation)->Arg(0)->Arg(1);

void BM_trace_expansion(benchmark::State& st) {
    CodeSpec spec = CodeSpec::untwisted(Lattice2D(GroupSpec({2}), 4, 4, Boundary::Periodic, Boundary::Periodic));
    auto ps = all_plaquettes(spec);
    for (auto _ : st) {
        auto d = trace_expansion_dimension(ps, spec.lattice.group(), spec.lattice.site_count(), st.range(0) != 0);
        benchmark::DoNotOptimize(d.dimension);
    }
}
BENCHMARK(BM_trace_expansion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_contract_pepes(benchmark::State& st) {
    GroupSpec g({3});
    auto layers = make_layers(3, 3, Boundary::Periodic);
    auto net = assemble_pepes(g, layers);
    StateVector in = StateVector::basis(std::vector<SiteKind>(3, SiteKind::VertexDual), {3, 3, 3}, {0, 0, 0});
    for (auto _ : st) {
        auto out = contract_pepes(net, in, kDefaultDimensionCap, st.range(0) != 0);
        benchmark::DoNotOptimize(out.amps().data());
    }
}
BENCHMARK(BM_contract_pepes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

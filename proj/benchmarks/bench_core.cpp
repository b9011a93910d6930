// Copyright 2026 The lgt Authors
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


#include <benchmark/benchmark.h>

#include "lgt/circuits.hpp"
#include "lgt/dynamics.hpp"
#include "lgt/hamiltonian.hpp"

namespace {

lgt::ModelSpec chain(int n_sites, double S) {
  lgt::ModelSpec s;
  s.lattice.extents = {n_sites};
  s.lattice.boundary = lgt::Boundary::Periodic;
  s.S = S;
  s.params.lambda = 10;
  return s;
}

void BM_PauliProduct(benchmark::State& st) {
  const auto link = lgt::qlm_link(static_cast<double>(st.range(0)) - 0.5, lgt::Encoding::Logarithmic);
  for (auto _ : st) benchmark::DoNotOptimize(link->U * link->Udag);
}
BENCHMARK(BM_PauliProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_Assemble(benchmark::State& st) {
  const lgt::LatticeModel model(chain(static_cast<int>(st.range(0)), 1.0));
  for (auto _ : st) benchmark::DoNotOptimize(lgt::assemble(model));
}
BENCHMARK(BM_Assemble)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PauliExp(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  lgt::StateVector s = lgt::StateVector::basis(n, 0);
  lgt::PauliWord w(n);
  for (std::size_t q = 0; q < n; q += 3) w.set(q, q % 2 ? lgt::Axis::Y : lgt::Axis::X);
  for (auto _ : st) lgt::apply_pauli_exp(s, w, 0.01);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.dim()));
}
BENCHMARK(BM_PauliExp)->Arg(12)->Arg(16)->Arg(20);

void BM_TrotterStepVacuumDecay(benchmark::State& st) {
  const lgt::LatticeModel model(chain(3, 1.0));
  lgt::HamiltonianTerms t = lgt::assemble(model);
  const lgt::TrotterPlan plan = lgt::make_trotter_plan({t.total}, 0.005, 0.005);
  lgt::StateVector s = lgt::StateVector::basis(model.n_qubits(), 0);
  for (auto _ : st) lgt::trotter_step(s, plan);
}
BENCHMARK(BM_TrotterStepVacuumDecay)->Unit(benchmark::kMillisecond);

void BM_SynthesizeStep(benchmark::State& st) {
  lgt::HamiltonianTerms t = lgt::assemble(lgt::LatticeModel(chain(3, 1.0)));
  t.drop_identity();
  for (auto _ : st) benchmark::DoNotOptimize(lgt::synth_trotter_step(t.total, 0.005));
}
BENCHMARK(BM_SynthesizeStep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

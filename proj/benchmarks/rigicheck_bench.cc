// Copyright 2026 The Rigicheck Authors.
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

#include "rigicheck/block_tree.h"
#include "rigicheck/decision.h"
#include "rigicheck/fogelsanger.h"
#include "rigicheck/graph.h"
#include "rigicheck/named.h"
#include "rigicheck/oracle.h"
#include "rigicheck/rigidity.h"
#include "rigicheck/simplicial.h"

namespace rigicheck {
namespace {

void BM_IsCircuitStackedSphere(benchmark::State& state) {
  const SimplicialMulticomplex s = StackedSphere(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(IsCircuit(s));
}
BENCHMARK(BM_IsCircuitStackedSphere)->Arg(16)->Arg(64)->Arg(256);

void BM_EnumerateCircuits(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateCircuitsUpTo(2, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateCircuits)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_DecomposeTorus(benchmark::State& state) {
  const SimplicialMulticomplex s = SevenVertexTorus();
  for (auto _ : state) benchmark::DoNotOptimize(Decompose(s, 0, 1));
}
BENCHMARK(BM_DecomposeTorus);

void BM_BlockTreeStackedSphere(benchmark::State& state) {
  const Graph g = GraphOf(StackedSphere(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(BuildBlockTree(g, 3));
}
BENCHMARK(BM_BlockTreeStackedSphere)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_GenericRank(benchmark::State& state) {
  const Graph g = GraphOf(StackedSphere(2, static_cast<int>(state.range(0))));
  RandomOptions opts;
  opts.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(IsRigid(g, 3, opts));
}
BENCHMARK(BM_GenericRank)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_StressTestK66(benchmark::State& state) {
  const Graph g = CompleteBipartiteGraph(6, 6);
  RandomOptions opts;
  opts.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(IsGloballyRigidGHT(g, 3, opts));
}
BENCHMARK(BM_StressTestK66)->Unit(benchmark::kMillisecond);

void BM_GloballyRigidCircuit(benchmark::State& state) {
  const SimplicialMulticomplex s = CyclicPolytopeBoundary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GloballyRigidCircuit(s));
}
BENCHMARK(BM_GloballyRigidCircuit)->Arg(7)->Arg(10);

}  // namespace
}  // namespace rigicheck

BENCHMARK_MAIN();

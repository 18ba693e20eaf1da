// Copyright 2026 The pdcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pdcap/diagnostics.hpp"
#include "pdcap/entropy.hpp"
#include "pdcap/linalg.hpp"
#include "pdcap/regions.hpp"
#include "pdcap/rng.hpp"
#include "pdcap/tradeoff.hpp"

namespace {

using namespace pdcap;

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (Complex& z : g.data()) z = Complex(rng.normal(), rng.normal());
  return g + g.adjoint();
}

void BM_HermitianEigenvalues(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_VonNeumannEntropy(benchmark::State& state) {
  Rng rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const CqEnsemble ens = random_ensemble(n, 1, 1, n, rng);
  const DensityOperator& rho = ens.state(0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->Arg(2)->Arg(4)->Arg(11);

void BM_EvaluateEnsemble(benchmark::State& state) {
  Rng rng(3);
  const KrausChannel ch = state.range(0) == 0 ? make_dephasing(0.2) : make_cloning(10);
  const CqEnsemble ens = random_ensemble(2, 4, 4, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_ensemble(ch, ens));
}
BENCHMARK(BM_EvaluateEnsemble)->Arg(0)->Arg(1);

void BM_MaximizeP(benchmark::State& state) {
  const KrausChannel ch = make_dephasing(0.2);
  SearchConfig cfg;
  cfg.restarts = 5;
  set_warning_handler([](std::string_view) {});
  for (auto _ : state) benchmark::DoNotOptimize(maximize_p(ch, {1.0, 1.0}, cfg));
  set_warning_handler(nullptr);
}
BENCHMARK(BM_MaximizeP)->Unit(benchmark::kMillisecond);

void BM_ParetoPoint(benchmark::State& state) {
  const BoundaryFamily family = cloning_family(10);
  for (auto _ : state) benchmark::DoNotOptimize(pareto_point(family, TradeoffWeights{1.0, 0.5}));
}
BENCHMARK(BM_ParetoPoint)->Unit(benchmark::kMicrosecond);

void BM_Membership(benchmark::State& state) {
  const BoundaryFamily family = dephasing_family(0.2);
  const RateTriple point{0.2, 0.5, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(membership(family, point));
}
BENCHMARK(BM_Membership)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

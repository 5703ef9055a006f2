// Copyright 2026 The dpmst Authors
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

#include <cmath>
#include <vector>

#include "dpmst/instances.h"
#include "dpmst/mechanisms.h"
#include "dpmst/privacy.h"
#include "dpmst/rng.h"
#include "dpmst/sampling_tree.h"

namespace dpmst {
namespace {

WeightedGraph Dense(std::size_t n) {
  RngStream gen(n);
  return erdos_renyi_instance(n, 0.5, 0.0, 100.0, gen, 0.1);
}

void RunMechanism(benchmark::State& state, MechanismId id) {
  const auto g = Dense(static_cast<std::size_t>(state.range(0)));
  const auto budget = PrivacyBudget::from_rho(1.0, 1e-6, 0.1);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    RngStream r(1, trial++);
    benchmark::DoNotOptimize(run_mechanism(id, g, budget, r).tree);
  }
  state.counters["edges"] = static_cast<double>(g.num_edges());
  state.SetComplexityN(static_cast<std::int64_t>(g.num_edges()));
}

void BM_Perturb(benchmark::State& s) { RunMechanism(s, MechanismId::kPerturb); }
void BM_PrivateKruskal(benchmark::State& s) { RunMechanism(s, MechanismId::kKruskal); }
void BM_OnePass(benchmark::State& s) { RunMechanism(s, MechanismId::kOnePass); }
void BM_Pamst(benchmark::State& s) { RunMechanism(s, MechanismId::kPamst); }
void BM_SealfonGauss(benchmark::State& s) { RunMechanism(s, MechanismId::kSealfonGauss); }

BENCHMARK(BM_Perturb)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_PrivateKruskal)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_OnePass)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_Pamst)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_SealfonGauss)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_SamplingTreeDrain(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  RngStream gen(2);
  std::vector<double> lw(m);
  for (double& x : lw) x = -10.0 * gen.uniform();
  RngStream r(3);
  for (auto _ : state) {
    SamplingTree t = SamplingTree::from_log_weights(lw);
    for (std::size_t i = 0; i < m; ++i) t.remove(t.sample(r));
    benchmark::DoNotOptimize(t.total());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_SamplingTreeDrain)->Range(1 << 10, 1 << 18);

void BM_PhiloxUniform(benchmark::State& state) {
  RngStream r(4);
  for (auto _ : state) benchmark::DoNotOptimize(r.uniform());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxUniform);

}  // namespace
}  // namespace dpmst

BENCHMARK_MAIN();

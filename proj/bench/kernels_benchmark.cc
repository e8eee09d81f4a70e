// Copyright 2026 The RIDM Authors
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

// Serial versus OpenMP throughput of the two batch kernels: rollouts of a
// CMA-ES generation and expected-improvement probes of a BO proposal.

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "ridm/gaussian_process.h"
#include "ridm/harness.h"
#include "ridm/kernels.h"
#include "ridm/pid.h"

namespace ridm {
namespace {

Execution ModeOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_RolloutBatch(benchmark::State& state) {
  const Demonstration demo = ExpertDemonstration("reacher3", 0);
  auto env = MakeEnvironment("reacher3");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  std::vector<Eigen::VectorXd> points(static_cast<size_t>(state.range(1)));
  for (auto& p : points) {
    p.resize(6);
    for (int i = 0; i < 6; ++i) p(i) = u(rng);
  }
  const PointFunction f = [&](const Eigen::VectorXd& x) {
    GainParams g{GainScheme::kLocal, GainTerms::kPD, 3,
                 std::vector<double>(x.data(), x.data() + x.size())};
    return TrackDemonstration(*env, demo, g, 0).cumulative_reward;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvaluateBatch(f, points, ModeOf(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_RolloutBatch)->ArgsProduct({{0, 1}, {10, 40}});

void BM_ExpectedImprovementProbes(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  GpState gp(4);
  for (int i = 0; i < state.range(1); ++i) {
    Eigen::VectorXd x(4);
    for (int j = 0; j < 4; ++j) x(j) = u(rng);
    gp.AddObservation(x, u(rng));
  }
  std::vector<Eigen::VectorXd> probes(1024);
  for (auto& p : probes) {
    p.resize(4);
    for (int j = 0; j < 4; ++j) p(j) = u(rng);
  }
  const PointFunction f = [&](const Eigen::VectorXd& x) {
    return ExpectedImprovement(gp, x);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvaluateBatch(f, probes, ModeOf(state)));
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_ExpectedImprovementProbes)->ArgsProduct({{0, 1}, {10, 40}});

}  // namespace
}  // namespace ridm

BENCHMARK_MAIN();

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

// Reinforced inverse dynamics modeling.
//
// Phase 1 (optional) fits the PID gains to self-generated (s, a, s')
// triples by maximizing a range-normalized negative absolute action error.
// Phase 2 tunes the gains by black-box maximization of the cumulative
// environment reward obtained while tracking a single state-only expert
// demonstration, using the expert's next state as each step's set point.

#ifndef RIDM_RIDM_H_
#define RIDM_RIDM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ridm/envs.h"
#include "ridm/kernels.h"
#include "ridm/optimize.h"
#include "ridm/pid.h"
#include "ridm/types.h"

namespace ridm {

// added to each action range so constant action dimensions stay finite
inline constexpr double kRangeEpsilon = 1e-8;
// fitness of a rollout whose reward is not finite
inline constexpr double kFailedRolloutFitness = -1e9;

struct PretrainProblem {
  TransitionDataset dataset;
  GainScheme scheme = GainScheme::kLocal;
  GainTerms terms = GainTerms::kPD;
  double dt = 0.02;
  PidOptions pid;
  // when non-empty, predictions are clamped exactly like executed actions
  std::vector<std::pair<double, double>> action_bounds;
};

// -(1/T) sum_t sum_n |M(s_t, s_{t+1})_n - a_tn| / (range_n + kRangeEpsilon),
// with one PID state threaded along the trajectory from a fresh reset.
// At most 0; 0 only when every prediction is exact.
double PretrainLoss(const GainParams& gains, const PretrainProblem& problem);

// The exploration trajectory: one ScriptedExpert episode of max_steps.
PretrainProblem MakePretrainProblem(const Environment& env, GainScheme scheme,
                                    GainTerms terms, uint64_t seed);

struct PretrainResult {
  GainParams gains;
  double loss = 0.0;
  double initial_loss = 0.0;
  OptimizeResult optimizer;
};

// CMA-ES from log_gains = 0. A zero budget returns the start unchanged.
PretrainResult PretrainGains(const PretrainProblem& problem, uint64_t seed,
                             int budget,
                             Execution execution = Execution::kParallel);

enum class InitMode { kRandom, kPretrained };

std::string_view InitModeName(InitMode mode);
InitMode ParseInitMode(std::string_view name);

// bounds of the Random-mode draw, per log10 gain
inline constexpr double kRandomLogGainLow = -1.0;
inline constexpr double kRandomLogGainHigh = 2.0;

GainParams InitGains(GainScheme scheme, GainTerms terms, int joint_count,
                     InitMode mode, const PretrainProblem* problem,
                     uint64_t seed, int pretrain_budget = 1000);

struct RidmConfig {
  std::string env_id;
  Demonstration demo;
  GainParams gains_init;
  Method method = Method::kCmaes;
  int budget = 2000;
  uint64_t optimizer_seed = 0;
  // environment seed of every tracking rollout
  uint64_t eval_seed = 0;
  double sigma0 = 0.5;
  // CMA-ES stops after this many generations without improvement
  int stagnation_generations = 20;
  double stagnation_tolerance = 1e-6;
  // BO search box per log10 gain; BO clamps the init into it
  double bo_log_gain_low = -2.0;
  double bo_log_gain_high = 4.0;
  GpOptions gp;
  Execution execution = Execution::kParallel;
};

struct RidmHistoryEntry {
  GainParams gains;
  double reward = 0.0;
};

struct RidmRun {
  RidmConfig config;
  std::vector<RidmHistoryEntry> history;
  OptimizeResult optimizer;
  GainParams best_gains;
  RolloutRecord best_rollout;
};

// R_env(demo; gains), with non-finite totals mapped to kFailedRolloutFitness
double TrackingFitness(const Environment& env, const Demonstration& demo,
                       const GainParams& gains, uint64_t seed);

RidmRun ReinforceGains(const RidmConfig& config);

}  // namespace ridm

#endif  // RIDM_RIDM_H_

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

#include "ridm/ridm.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace ridm {

namespace {

GainParams WithLogGains(const GainParams& shape, const Eigen::VectorXd& x) {
  GainParams gains = shape;
  gains.log_gains.assign(x.data(), x.data() + x.size());
  return gains;
}

Eigen::VectorXd ToVector(const std::vector<double>& values) {
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<int>(values.size()));
}

}  // namespace

double PretrainLoss(const GainParams& gains, const PretrainProblem& problem) {
  const TransitionDataset& data = problem.dataset;
  const int action_dim = data.action_dim();
  if (gains.joint_count != action_dim ||
      static_cast<int>(data.triples().front().state.size()) != action_dim) {
    throw Error("pretrain: gains, states and actions disagree in dimension");
  }
  if (!problem.action_bounds.empty() &&
      static_cast<int>(problem.action_bounds.size()) != action_dim) {
    throw Error("pretrain: action bounds do not match action dimension");
  }
  std::vector<double> inv_range(action_dim);
  for (int n = 0; n < action_dim; ++n) {
    const auto [lo, hi] = data.action_ranges()[n];
    inv_range[n] = 1.0 / (hi - lo + kRangeEpsilon);
  }

  PidState pid = ResetPid(action_dim);
  double total = 0.0;
  for (const Transition& tr : data.triples()) {
    IdmOutput out = IdmAction(gains, pid, tr.state, tr.next_state, problem.dt,
                              problem.pid);
    pid = std::move(out.state);
    for (int n = 0; n < action_dim; ++n) {
      double predicted = out.action[n];
      if (!problem.action_bounds.empty()) {
        predicted = std::clamp(predicted, problem.action_bounds[n].first,
                               problem.action_bounds[n].second);
      }
      total += std::abs(predicted - tr.action[n]) * inv_range[n];
    }
  }
  return -total / data.size();
}

PretrainProblem MakePretrainProblem(const Environment& env, GainScheme scheme,
                                    GainTerms terms, uint64_t seed) {
  const EnvSpec& spec = env.spec();
  RolloutRecord record =
      RolloutPolicy(env, {PolicyKind::kScriptedExpert, seed}, seed,
                    spec.max_steps);
  return PretrainProblem{TransitionDataset::FromRollout(record), scheme,
                         terms, spec.dt, PidOptionsFor(spec),
                         spec.action_bounds};
}

PretrainResult PretrainGains(const PretrainProblem& problem, uint64_t seed,
                             int budget, Execution execution) {
  if (budget < 0) throw Error("pretrain: negative budget");
  const int joints = problem.dataset.action_dim();
  PretrainResult result;
  result.gains = GainParams::Uniform(problem.scheme, problem.terms, joints, 0.0);
  result.initial_loss = PretrainLoss(result.gains, problem);
  result.loss = result.initial_loss;
  if (budget == 0) return result;

  const GainParams shape = result.gains;
  ObjectiveHandle objective;
  objective.dimension = shape.Size();
  objective.budget = budget;
  objective.evaluate = [&](const Eigen::VectorXd& x) {
    const double loss = PretrainLoss(WithLogGains(shape, x), problem);
    return std::isfinite(loss) ? loss : kFailedRolloutFitness;
  };
  OptimizeOptions options;
  options.seed = seed;
  options.execution = execution;
  result.optimizer =
      Optimize(objective, Method::kCmaes, ToVector(shape.log_gains), options);
  result.gains = WithLogGains(shape, result.optimizer.best_params);
  result.loss = result.optimizer.best_fitness;
  return result;
}

std::string_view InitModeName(InitMode mode) {
  return mode == InitMode::kRandom ? "random" : "pretrained";
}

InitMode ParseInitMode(std::string_view name) {
  if (name == "random") return InitMode::kRandom;
  if (name == "pretrained") return InitMode::kPretrained;
  throw Error("unknown init mode '" + std::string(name) +
              "' (expected random or pretrained)");
}

GainParams InitGains(GainScheme scheme, GainTerms terms, int joint_count,
                     InitMode mode, const PretrainProblem* problem,
                     uint64_t seed, int pretrain_budget) {
  if (mode == InitMode::kPretrained) {
    if (problem == nullptr) {
      throw Error("init: pretrained mode needs a pretraining problem");
    }
    if (problem->scheme != scheme || problem->terms != terms ||
        problem->dataset.action_dim() != joint_count) {
      throw Error("init: pretraining problem does not match the gain shape");
    }
    return PretrainGains(*problem, seed, pretrain_budget).gains;
  }
  GainParams gains = GainParams::Uniform(scheme, terms, joint_count, 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(kRandomLogGainLow,
                                                 kRandomLogGainHigh);
  for (double& g : gains.log_gains) g = uniform(rng);
  return gains;
}

double TrackingFitness(const Environment& env, const Demonstration& demo,
                       const GainParams& gains, uint64_t seed) {
  const double reward =
      TrackDemonstration(env, demo, gains, seed).cumulative_reward;
  return std::isfinite(reward) ? reward : kFailedRolloutFitness;
}

RidmRun ReinforceGains(const RidmConfig& config) {
  if (config.budget <= 0) throw Error("budget must be positive");
  auto env = MakeEnvironment(config.env_id);
  config.demo.Validate();
  config.gains_init.Validate();
  if (config.demo.env_id != config.env_id) {
    throw Error("demonstration is for '" + config.demo.env_id +
                "', run is for '" + config.env_id + "'");
  }
  if (config.demo.JointCount() != env->spec().joint_count ||
      config.gains_init.joint_count != env->spec().joint_count) {
    throw Error("joint count mismatch for " + config.env_id);
  }

  const GainParams& shape = config.gains_init;
  Eigen::VectorXd init = ToVector(shape.log_gains);
  if (config.method == Method::kBo) {
    init = init.cwiseMax(config.bo_log_gain_low)
               .cwiseMin(config.bo_log_gain_high);
  }
  ObjectiveHandle objective;
  objective.dimension = shape.Size();
  objective.budget = config.budget;
  objective.lower = Eigen::VectorXd::Constant(init.size(),
                                             config.bo_log_gain_low);
  objective.upper = Eigen::VectorXd::Constant(init.size(),
                                             config.bo_log_gain_high);
  // the demonstration carries states only, so no expert action is read here
  objective.evaluate = [&](const Eigen::VectorXd& x) {
    return TrackingFitness(*env, config.demo, WithLogGains(shape, x),
                           config.eval_seed);
  };

  OptimizeOptions options;
  options.seed = config.optimizer_seed;
  options.execution = config.execution;
  options.sigma0 = config.sigma0;
  options.stagnation_generations = config.stagnation_generations;
  options.stagnation_tolerance = config.stagnation_tolerance;
  options.gp = config.gp;

  RidmRun run;
  run.config = config;
  run.optimizer = Optimize(objective, config.method, init, options);
  run.history.reserve(run.optimizer.evaluations());
  for (int i = 0; i < run.optimizer.evaluations(); ++i) {
    run.history.push_back({WithLogGains(shape, run.optimizer.params[i]),
                           run.optimizer.fitness[i]});
  }
  run.best_gains = WithLogGains(shape, run.optimizer.best_params);
  run.best_rollout =
      TrackDemonstration(*env, config.demo, run.best_gains, config.eval_seed);
  return run;
}

}  // namespace ridm

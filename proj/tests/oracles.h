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

// Reference computations shared by the unit and acceptance tests. Nothing
// here calls into the code under test for the quantity being checked.

#ifndef RIDM_TESTS_ORACLES_H_
#define RIDM_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "ridm/envs.h"
#include "ridm/ridm.h"
#include "ridm/types.h"

namespace ridm::testing {

// E[max(Y - best, 0)] for Y ~ N(mean, sd^2), by stratified Monte Carlo:
// one uniform draw inside each of `samples` equal-probability strata.
inline double MonteCarloImprovement(double mean, double sd, double best,
                                    int samples, uint64_t seed) {
  const boost::math::normal_distribution<double> standard;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    double u = (i + unit(rng)) / samples;
    u = std::clamp(u, 1e-300, 1.0 - 1e-16);
    const double y = mean + sd * boost::math::quantile(standard, u);
    total += std::max(y - best, 0.0);
  }
  return total / samples;
}

// Same quantity with Y - best as a control variate of known expectation
// (mean - best); only the small shortfall term is sampled.
inline double MonteCarloImprovementControlled(double mean, double sd,
                                              double best, int samples,
                                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double shortfall = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double y = mean + sd * normal(rng);
    shortfall += std::max(best - y, 0.0);
  }
  return (mean - best) + shortfall / samples;
}

// States of an Exploration episode on dint1 with every action replaced by
// the Global-P law kp * (x_{t+1} - x_t). The label is computed here rather
// than through IdmAction.
inline PretrainProblem RelabelledGlobalP(double kp, uint64_t seed = 0) {
  auto env = MakeEnvironment("dint1");
  const RolloutRecord record = RolloutPolicy(
      *env, {PolicyKind::kExploration, seed}, seed, env->spec().max_steps);
  std::vector<Transition> triples;
  for (int t = 0; t + 1 < static_cast<int>(record.states.size()); ++t) {
    const JointVector& s = record.states[t];
    const JointVector& next = record.states[t + 1];
    triples.push_back({s, {kp * (next[0] - s[0])}, next});
  }
  PretrainProblem problem{TransitionDataset(std::move(triples)),
                          GainScheme::kGlobal, GainTerms::kP,
                          env->spec().dt, PidOptionsFor(env->spec()), {}};
  return problem;
}

// Exploration states on dint1 relabelled by a hand-written PD law with a
// zero derivative on the first step.
inline PretrainProblem RelabelledGlobalPD(double kp, double kd,
                                          uint64_t seed = 0) {
  auto env = MakeEnvironment("dint1");
  const double dt = env->spec().dt;
  const RolloutRecord record = RolloutPolicy(
      *env, {PolicyKind::kExploration, seed}, seed, env->spec().max_steps);
  std::vector<Transition> triples;
  double prev = 0.0;
  for (int t = 0; t + 1 < static_cast<int>(record.states.size()); ++t) {
    const JointVector& s = record.states[t];
    const JointVector& next = record.states[t + 1];
    const double e = next[0] - s[0];
    const double derivative = t == 0 ? 0.0 : (e - prev) / dt;
    triples.push_back({s, {kp * e + kd * derivative}, next});
    prev = e;
  }
  return PretrainProblem{TransitionDataset(std::move(triples)),
                         GainScheme::kGlobal, GainTerms::kPD, dt,
                         PidOptionsFor(env->spec()), {}};
}

inline double Sphere(const Eigen::VectorXd& x) { return -x.squaredNorm(); }

inline double NegatedRosenbrock(const Eigen::VectorXd& x) {
  double f = 0.0;
  for (int i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    f += 100.0 * a * a + b * b;
  }
  return -f;
}

}  // namespace ridm::testing

#endif  // RIDM_TESTS_ORACLES_H_

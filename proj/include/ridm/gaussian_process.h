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

// Gaussian-process regression over the unit hypercube and Bayesian
// optimization with expected improvement.

#ifndef RIDM_GAUSSIAN_PROCESS_H_
#define RIDM_GAUSSIAN_PROCESS_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ridm/kernels.h"
#include "ridm/objective.h"

namespace ridm {

struct GpOptions {
  // squared-exponential length scale, unit-cube coordinates
  double length_scale = 0.2;
  // observation noise, in units of the standardized fitness
  double noise = 1e-6;
  // jitter escalates x10 from `noise` up to this bound before giving up
  double max_jitter = 1e-2;
};

struct GpObservation {
  Eigen::VectorXd x;
  double fitness = 0.0;
};

struct GpPosterior {
  double mean = 0.0;
  double variance = 0.0;
};

// Fitness values are standardized before fitting, so the signal variance
// tracks the observed-fitness variance. With no observations the prior is
// mean 0, variance 1.
class GpState {
 public:
  explicit GpState(int dimension, GpOptions options = {});

  // x must lie in the unit cube; refits the model
  void AddObservation(const Eigen::VectorXd& x, double fitness);

  GpPosterior Posterior(const Eigen::VectorXd& x) const;

  int dimension() const { return dimension_; }
  const GpOptions& options() const { return options_; }
  const std::vector<GpObservation>& observed() const { return observed_; }
  bool empty() const { return observed_.empty(); }
  // best observation; first one wins ties
  const GpObservation& incumbent() const;
  // diagonal jitter of the current factorization
  double jitter() const { return jitter_; }

 private:
  void Refit();

  int dimension_;
  GpOptions options_;
  std::vector<GpObservation> observed_;
  int incumbent_ = -1;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
  double jitter_ = 0.0;
  Eigen::MatrixXd chol_lower_;
  Eigen::VectorXd alpha_;
};

GpPosterior GpPosteriorAt(const GpState& state, const Eigen::VectorXd& x);

// closed-form EI for maximization, max(mean - best, 0) when sd = 0
double ExpectedImprovement(double mean, double sd, double best);
double ExpectedImprovement(const GpState& state, const Eigen::VectorXd& x);

inline constexpr int kEiProbes = 1024;

// First point of an empty state is the cube center. Otherwise EI is scored
// on kEiProbes shifted Halton points, the best probe is refined by compass
// search, and the objective is evaluated there. Throws Error("budget
// exhausted") when `objective.budget` observations already exist.
GpState BoStep(const GpState& state, const ObjectiveHandle& objective,
               uint64_t rng_seed, Execution execution = Execution::kParallel);

// the unit-cube point BoStep would evaluate next
Eigen::VectorXd ProposeNext(const GpState& state, uint64_t rng_seed,
                            Execution execution = Execution::kParallel);

Eigen::VectorXd FromUnitCube(const ObjectiveHandle& objective,
                             const Eigen::VectorXd& unit);
Eigen::VectorXd ToUnitCube(const ObjectiveHandle& objective,
                           const Eigen::VectorXd& x);

}  // namespace ridm

#endif  // RIDM_GAUSSIAN_PROCESS_H_

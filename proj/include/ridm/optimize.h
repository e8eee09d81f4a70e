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

#ifndef RIDM_OPTIMIZE_H_
#define RIDM_OPTIMIZE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ridm/cmaes.h"
#include "ridm/gaussian_process.h"
#include "ridm/kernels.h"
#include "ridm/objective.h"

namespace ridm {

enum class Method { kCmaes, kBo };

std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);

struct OptimizeOptions {
  uint64_t seed = 0;
  Execution execution = Execution::kParallel;

  // CMA-ES
  double sigma0 = 0.5;
  // <= 0 selects the default population size
  int lambda = 0;
  // stop after this many generations without a best-so-far gain larger than
  // stagnation_tolerance; 0 disables
  int stagnation_generations = 0;
  double stagnation_tolerance = 1e-6;
  // stop once sigma * sqrt(max eigenvalue) falls below this
  double min_step = 1e-300;

  // Bayesian optimization
  GpOptions gp;
};

struct OptimizeResult {
  Eigen::VectorXd best_params;
  double best_fitness = 0.0;
  // one entry per evaluation, in evaluation order
  std::vector<Eigen::VectorXd> params;
  std::vector<double> fitness;
  std::vector<double> best_so_far;
  int generations = 0;

  int evaluations() const { return static_cast<int>(fitness.size()); }
};

// Evaluates `init` first, then runs the chosen method until the budget is
// spent or a stop criterion fires. The incumbent only changes on a strict
// improvement, so ties keep the earliest point.
OptimizeResult Optimize(const ObjectiveHandle& objective, Method method,
                        const Eigen::VectorXd& init,
                        const OptimizeOptions& options = {});

// CSV with columns eval_index, fitness, best_so_far
std::string HistoryToCsv(const OptimizeResult& result);

}  // namespace ridm

#endif  // RIDM_OPTIMIZE_H_

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

#include "ridm/optimize.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "ridm/text_io.h"
#include "ridm/types.h"

namespace ridm {

namespace {

class HistoryRecorder {
 public:
  explicit HistoryRecorder(OptimizeResult& result) : result_(result) {}

  void Record(const Eigen::VectorXd& x, double fitness) {
    // NaN only holds the incumbent slot until anything else arrives
    const bool replace =
        result_.fitness.empty() ||
        (!std::isnan(fitness) && (std::isnan(result_.best_fitness) ||
                                  fitness > result_.best_fitness));
    if (replace) {
      result_.best_fitness = fitness;
      result_.best_params = x;
    }
    result_.params.push_back(x);
    result_.fitness.push_back(fitness);
    result_.best_so_far.push_back(result_.best_fitness);
  }

 private:
  OptimizeResult& result_;
};

void RunCmaes(const ObjectiveHandle& objective, const Eigen::VectorXd& init,
              const OptimizeOptions& options, OptimizeResult& result) {
  HistoryRecorder history(result);
  history.Record(init, objective.evaluate(init));

  CmaState state = CmaInit(init, options.sigma0, options.lambda);
  int stagnant = 0;
  double last_best = result.best_fitness;
  while (result.evaluations() < objective.budget) {
    std::vector<Eigen::VectorXd> candidates = CmaAsk(state, options.seed);
    const int remaining = objective.budget - result.evaluations();
    const int count =
        std::min(remaining, static_cast<int>(candidates.size()));
    std::vector<double> fitness = EvaluateBatch(
        objective.evaluate, std::span(candidates.data(), count),
        options.execution);
    for (int i = 0; i < count; ++i) history.Record(candidates[i], fitness[i]);
    // a truncated final generation is recorded but not told
    if (count < static_cast<int>(candidates.size())) break;

    state = CmaTell(state, candidates, fitness);
    ++result.generations;

    if (options.stagnation_generations > 0) {
      if (result.best_fitness - last_best > options.stagnation_tolerance) {
        stagnant = 0;
        last_best = result.best_fitness;
      } else if (++stagnant >= options.stagnation_generations) {
        break;
      }
    }
    if (state.sigma * state.scales.maxCoeff() < options.min_step) break;
  }
}

void RunBo(const ObjectiveHandle& objective, const Eigen::VectorXd& init,
           const OptimizeOptions& options, OptimizeResult& result) {
  HistoryRecorder history(result);
  GpState state(objective.dimension, options.gp);

  const Eigen::VectorXd init_unit = ToUnitCube(objective, init);
  const Eigen::VectorXd start = FromUnitCube(objective, init_unit);
  const double f0 = objective.evaluate(start);
  history.Record(start, f0);
  state.AddObservation(init_unit, f0);

  while (result.evaluations() < objective.budget) {
    state = BoStep(state, objective, options.seed, options.execution);
    const GpObservation& last = state.observed().back();
    history.Record(FromUnitCube(objective, last.x), last.fitness);
    ++result.generations;
  }
}

}  // namespace

std::string_view MethodName(Method method) {
  return method == Method::kCmaes ? "cmaes" : "bo";
}

Method ParseMethod(std::string_view name) {
  if (name == "cmaes") return Method::kCmaes;
  if (name == "bo") return Method::kBo;
  throw Error("unknown method '" + std::string(name) +
              "' (expected cmaes or bo)");
}

OptimizeResult Optimize(const ObjectiveHandle& objective, Method method,
                        const Eigen::VectorXd& init,
                        const OptimizeOptions& options) {
  if (init.size() != objective.dimension) {
    throw Error("optimize: init has dimension " + std::to_string(init.size()) +
                ", objective expects " + std::to_string(objective.dimension));
  }
  if (objective.budget < 1) throw Error("budget must be positive");
  if (!objective.evaluate) throw Error("optimize: objective has no evaluate");

  OptimizeResult result;
  if (method == Method::kCmaes) {
    RunCmaes(objective, init, options, result);
  } else {
    RunBo(objective, init, options, result);
  }
  return result;
}

std::string HistoryToCsv(const OptimizeResult& result) {
  std::ostringstream out;
  out << "eval_index,fitness,best_so_far\n";
  for (int i = 0; i < result.evaluations(); ++i) {
    out << i << ',' << FormatDouble(result.fitness[i]) << ','
        << FormatDouble(result.best_so_far[i]) << '\n';
  }
  return out.str();
}

}  // namespace ridm

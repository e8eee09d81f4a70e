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

#ifndef RIDM_OBJECTIVE_H_
#define RIDM_OBJECTIVE_H_

#include <functional>

#include <Eigen/Core>

namespace ridm {

// A black-box fitness to be MAXIMIZED. `evaluate` must be deterministic and
// safe to call concurrently.
struct ObjectiveHandle {
  int dimension = 0;
  std::function<double(const Eigen::VectorXd&)> evaluate;
  int budget = 0;
  // search box, used by Bayesian optimization to map the unit cube
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

}  // namespace ridm

#endif  // RIDM_OBJECTIVE_H_

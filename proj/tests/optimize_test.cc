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

#include <cmath>
#include <limits>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "ridm/optimize.h"

namespace ridm {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

ObjectiveHandle Boxed(int dim, int budget,
                      std::function<double(const Eigen::VectorXd&)> f) {
  ObjectiveHandle h;
  h.dimension = dim;
  h.budget = budget;
  h.evaluate = std::move(f);
  h.lower = Eigen::VectorXd::Constant(dim, -2.0);
  h.upper = Eigen::VectorXd::Constant(dim, 2.0);
  return h;
}

void ExpectMonotone(const OptimizeResult& r) {
  ASSERT_EQ(r.best_so_far.size(), r.fitness.size());
  for (size_t i = 1; i < r.best_so_far.size(); ++i) {
    EXPECT_GE(r.best_so_far[i], r.best_so_far[i - 1]);
  }
  EXPECT_EQ(r.best_so_far.back(), r.best_fitness);
}

TEST(OptimizeTest, ConstantObjectiveKeepsInit) {
  const Eigen::Vector3d init(0.5, -1.0, 1.25);
  for (Method m : {Method::kCmaes, Method::kBo}) {
    const auto f = Boxed(3, 30, [](const Eigen::VectorXd&) { return 4.0; });
    const OptimizeResult r = Optimize(f, m, init);
    EXPECT_EQ(r.best_fitness, 4.0);
    EXPECT_EQ(r.best_params, init);
    EXPECT_EQ(r.evaluations(), 30);
    EXPECT_EQ(r.params.front(), init);
  }
}

TEST(OptimizeTest, BestSoFarIsMonotone) {
  for (Method m : {Method::kCmaes, Method::kBo}) {
    const auto f = Boxed(2, 40, testing::NegatedRosenbrock);
    const OptimizeResult r = Optimize(f, m, Eigen::Vector2d(-1.0, 1.5));
    ExpectMonotone(r);
    double best = -1e300;
    for (double x : r.fitness) best = std::max(best, x);
    EXPECT_EQ(r.best_fitness, best);
  }
}

TEST(OptimizeTest, NonFiniteFitnessNeverBecomesIncumbentLate) {
  int calls = 0;
  const auto f = Boxed(2, 24, [&](const Eigen::VectorXd& x) {
    return ++calls % 3 == 0 ? std::numeric_limits<double>::quiet_NaN()
                            : -x.squaredNorm();
  });
  OptimizeOptions options;
  options.execution = Execution::kSerial;
  const OptimizeResult r =
      Optimize(f, Method::kCmaes, Eigen::Vector2d(1.0, 1.0), options);
  EXPECT_TRUE(std::isfinite(r.best_fitness));
  ExpectMonotone(r);
}

TEST(OptimizeTest, BudgetIsExact) {
  const auto f = Boxed(4, 37, testing::Sphere);
  const OptimizeResult r =
      Optimize(f, Method::kCmaes, Eigen::VectorXd::Ones(4));
  EXPECT_EQ(r.evaluations(), 37);
  EXPECT_EQ(r.generations, 4);
}

TEST(OptimizeTest, StagnationStopsEarly) {
  const auto f = Boxed(2, 5000, [](const Eigen::VectorXd&) { return 1.0; });
  OptimizeOptions options;
  options.stagnation_generations = 5;
  const OptimizeResult r =
      Optimize(f, Method::kCmaes, Eigen::Vector2d(0.0, 0.0), options);
  EXPECT_EQ(r.generations, 5);
  EXPECT_EQ(r.evaluations(), 1 + 5 * CmaParameters::Defaults(2).lambda);
}

TEST(OptimizeTest, ArgumentErrors) {
  auto f = Boxed(2, 0, testing::Sphere);
  try {
    Optimize(f, Method::kCmaes, Eigen::Vector2d::Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr("budget must be positive"));
  }
  f.budget = 10;
  EXPECT_THROW(Optimize(f, Method::kBo, Eigen::Vector3d::Zero()), Error);
  EXPECT_THROW(ParseMethod("nelder-mead"), Error);
  EXPECT_EQ(ParseMethod(MethodName(Method::kBo)), Method::kBo);
}

TEST(OptimizeTest, BoQuadraticWithinTolerance) {
  ObjectiveHandle f;
  f.dimension = 1;
  f.budget = 25;
  f.evaluate = [](const Eigen::VectorXd& x) {
    return -(x(0) - 0.3) * (x(0) - 0.3);
  };
  f.lower = Eigen::VectorXd::Zero(1);
  f.upper = Eigen::VectorXd::Ones(1);
  const OptimizeResult r =
      Optimize(f, Method::kBo, Eigen::VectorXd::Constant(1, 0.9));
  EXPECT_EQ(r.evaluations(), 25);
  EXPECT_NEAR(r.best_params(0), 0.3, 0.05);
}

TEST(OptimizeTest, SerialAndParallelAgree) {
  for (Method m : {Method::kCmaes, Method::kBo}) {
    const auto f = Boxed(3, 60, testing::NegatedRosenbrock);
    OptimizeOptions serial, parallel;
    serial.execution = Execution::kSerial;
    parallel.execution = Execution::kParallel;
    serial.seed = parallel.seed = 31;
    const Eigen::Vector3d init(0.1, 0.2, 0.3);
    const OptimizeResult a = Optimize(f, m, init, serial);
    const OptimizeResult b = Optimize(f, m, init, parallel);
    EXPECT_EQ(a.fitness, b.fitness);
    EXPECT_EQ(HistoryToCsv(a), HistoryToCsv(b));
  }
}

TEST(HistoryCsvTest, Columns) {
  OptimizeResult r;
  r.fitness = {-3.0, -1.5, -2.0};
  r.best_so_far = {-3.0, -1.5, -1.5};
  EXPECT_EQ(HistoryToCsv(r),
            "eval_index,fitness,best_so_far\n"
            "0,-3,-3\n"
            "1,-1.5,-1.5\n"
            "2,-2,-1.5\n");
}

}  // namespace
}  // namespace ridm

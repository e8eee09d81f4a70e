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
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "ridm/gaussian_process.h"
#include "ridm/optimize.h"

namespace ridm {
namespace {

using ::testing::HasSubstr;

GpState RandomState(int dim, int n, uint64_t seed, GpOptions options = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  GpState state(dim, options);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x(dim);
    for (int j = 0; j < dim; ++j) x(j) = u(rng);
    state.AddObservation(x, 10.0 * u(rng) - 3.0);
  }
  return state;
}

ObjectiveHandle Quadratic1d(int budget) {
  ObjectiveHandle f;
  f.dimension = 1;
  f.budget = budget;
  f.evaluate = [](const Eigen::VectorXd& x) {
    return -(x(0) - 0.3) * (x(0) - 0.3);
  };
  f.lower = Eigen::VectorXd::Zero(1);
  f.upper = Eigen::VectorXd::Ones(1);
  return f;
}

TEST(GpPosteriorTest, EmptyIsPrior) {
  GpState state(3);
  const GpPosterior p = GpPosteriorAt(state, Eigen::Vector3d(0.2, 0.5, 0.9));
  EXPECT_EQ(p.mean, 0.0);
  EXPECT_EQ(p.variance, 1.0);
  EXPECT_THROW(state.incumbent(), Error);
}

TEST(GpPosteriorTest, InterpolatesNoiselessObservations) {
  GpOptions options;
  options.noise = 0.0;
  const GpState state = RandomState(2, 12, 5, options);
  for (const GpObservation& obs : state.observed()) {
    const GpPosterior p = state.Posterior(obs.x);
    EXPECT_NEAR(p.mean, obs.fitness, 1e-6);
    EXPECT_NEAR(p.variance, 0.0, 1e-6);
  }
}

TEST(GpPosteriorTest, SymmetricPairGivesMidpointAverage) {
  GpState state(1);
  state.AddObservation(Eigen::VectorXd::Constant(1, 0.3), 2.0);
  state.AddObservation(Eigen::VectorXd::Constant(1, 0.7), -5.0);
  EXPECT_NEAR(state.Posterior(Eigen::VectorXd::Constant(1, 0.5)).mean, -1.5,
              1e-12);
}

TEST(GpPosteriorTest, VarianceNonNegativeAndIncumbentIsMax) {
  const GpState state = RandomState(3, 30, 9);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Eigen::Vector3d x(u(rng), u(rng), u(rng));
    EXPECT_GE(state.Posterior(x).variance, 0.0);
  }
  double best = -1e300;
  for (const GpObservation& o : state.observed()) best = std::max(best, o.fitness);
  EXPECT_EQ(state.incumbent().fitness, best);
}

TEST(GpPosteriorTest, DuplicatePointsEscalateJitter) {
  GpOptions options;
  options.noise = 0.0;
  GpState state(1, options);
  state.AddObservation(Eigen::VectorXd::Constant(1, 0.5), 1.0);
  state.AddObservation(Eigen::VectorXd::Constant(1, 0.5), 2.0);
  EXPECT_GT(state.jitter(), 0.0);
  EXPECT_LE(state.jitter(), options.max_jitter);
  EXPECT_TRUE(std::isfinite(state.Posterior(Eigen::VectorXd::Zero(1)).mean));
}

TEST(GpPosteriorTest, FirstObservationWinsTies) {
  GpState state(1);
  state.AddObservation(Eigen::VectorXd::Constant(1, 0.1), 3.0);
  state.AddObservation(Eigen::VectorXd::Constant(1, 0.9), 3.0);
  EXPECT_EQ(state.incumbent().x(0), 0.1);
}

TEST(ExpectedImprovementTest, DegenerateSigma) {
  EXPECT_EQ(ExpectedImprovement(1.0, 0.0, 2.0), 0.0);
  EXPECT_EQ(ExpectedImprovement(2.0, 0.0, 2.0), 0.0);
  EXPECT_EQ(ExpectedImprovement(3.0, 0.0, 2.0), 1.0);
}

TEST(ExpectedImprovementTest, AtIncumbentMatchesMonteCarlo) {
  const double oracle = testing::MonteCarloImprovement(0.0, 1.0, 0.0,
                                                       1000000, 2026);
  EXPECT_NEAR(oracle, 0.39894, 1e-3);
  EXPECT_NEAR(ExpectedImprovement(0.0, 1.0, 0.0), oracle, 1e-3);
  EXPECT_NEAR(ExpectedImprovement(4.0, 1.0, 4.0), 0.39894, 1e-3);
}

TEST(ExpectedImprovementTest, ExploitationLimit) {
  for (double sd : {0.5, 1.0, 3.0}) {
    const double mean = 1.0 + 10.0 * sd;
    const double ei = ExpectedImprovement(mean, sd, 1.0);
    const double oracle = testing::MonteCarloImprovementControlled(
        mean, sd, 1.0, 1000000, 7);
    EXPECT_LT(std::abs(ei - oracle) / oracle, 1e-6);
  }
}

TEST(ExpectedImprovementTest, AgreesWithMonteCarloAcrossGaps) {
  for (double gap : {-2.0, -0.5, 0.3, 1.7}) {
    const double oracle =
        testing::MonteCarloImprovement(gap, 0.8, 0.0, 200000, 3);
    EXPECT_NEAR(ExpectedImprovement(gap, 0.8, 0.0), oracle, 1e-4) << gap;
  }
}

TEST(ExpectedImprovementTest, ZeroAtNoiselessObservations) {
  GpOptions options;
  options.noise = 0.0;
  const GpState state = RandomState(2, 10, 12, options);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const GpObservation& obs : state.observed()) {
    EXPECT_EQ(ExpectedImprovement(state, obs.x), 0.0);
  }
  for (int i = 0; i < 200; ++i) {
    EXPECT_GE(ExpectedImprovement(state, Eigen::Vector2d(u(rng), u(rng))),
              0.0);
  }
}

TEST(BoStepTest, QuadraticWithinBudget) {
  const ObjectiveHandle f = Quadratic1d(25);
  GpState state(1);
  for (int i = 0; i < 25; ++i) state = BoStep(state, f, 3);
  EXPECT_NEAR(state.incumbent().x(0), 0.3, 0.05);
  try {
    BoStep(state, f, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr("budget exhausted"));
  }
}

TEST(BoStepTest, RepeatableObservationSequence) {
  const ObjectiveHandle f = Quadratic1d(12);
  GpState a(1), b(1);
  for (int i = 0; i < 12; ++i) {
    a = BoStep(a, f, 99, Execution::kSerial);
    b = BoStep(b, f, 99, Execution::kParallel);
  }
  ASSERT_EQ(a.observed().size(), b.observed().size());
  for (size_t i = 0; i < a.observed().size(); ++i) {
    EXPECT_EQ(a.observed()[i].x, b.observed()[i].x);
    EXPECT_EQ(a.observed()[i].fitness, b.observed()[i].fitness);
  }
}

TEST(BoStepTest, EmptyStateProposesCentre) {
  EXPECT_EQ(ProposeNext(GpState(3), 0), Eigen::VectorXd::Constant(3, 0.5));
}

TEST(UnitCubeTest, MapsAndClamps) {
  ObjectiveHandle f;
  f.lower = Eigen::Vector2d(-2.0, 1.0);
  f.upper = Eigen::Vector2d(4.0, 3.0);
  const Eigen::Vector2d x(1.0, 2.5);
  EXPECT_LT((FromUnitCube(f, ToUnitCube(f, x)) - x).norm(), 1e-15);
  EXPECT_EQ(ToUnitCube(f, Eigen::Vector2d(-10.0, 10.0)),
            Eigen::Vector2d(0.0, 1.0));
  EXPECT_THROW(ToUnitCube(f, Eigen::VectorXd::Zero(3)), Error);
}

}  // namespace
}  // namespace ridm

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
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "ridm/cmaes.h"
#include "ridm/optimize.h"

namespace ridm {
namespace {

using ::testing::ElementsAre;

TEST(CmaParametersTest, DefaultPopulation) {
  EXPECT_EQ(CmaParameters::Defaults(4).lambda, 8);
  EXPECT_EQ(CmaParameters::Defaults(4).mu, 4);
  EXPECT_EQ(CmaParameters::Defaults(1).lambda, 4);
  EXPECT_EQ(CmaParameters::Defaults(10).lambda, 10);
  EXPECT_EQ(CmaParameters::Defaults(4, 20).lambda, 20);
  const CmaParameters p = CmaParameters::Defaults(6);
  EXPECT_NEAR(p.weights.sum(), 1.0, 1e-15);
  for (int i = 1; i < p.mu; ++i) EXPECT_LT(p.weights(i), p.weights(i - 1));
  EXPECT_GT(p.c_1 + p.c_mu, 0.0);
  EXPECT_LE(p.c_1 + p.c_mu, 1.0);
}

TEST(CmaAskTest, TinySigmaCollapsesToMean) {
  const Eigen::VectorXd mean = Eigen::Vector4d(1.0, -2.0, 3.5, 0.25);
  const CmaState state = CmaInit(mean, 1e-300);
  for (const Eigen::VectorXd& c : CmaAsk(state, 5)) EXPECT_EQ(c, mean);
}

TEST(CmaAskTest, DeterministicPerSeedAndGeneration) {
  const CmaState state = CmaInit(Eigen::VectorXd::Zero(4), 0.5);
  const auto a = CmaAsk(state, 17);
  const auto b = CmaAsk(state, 17);
  ASSERT_EQ(a.size(), 8u);
  for (size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
  const auto c = CmaAsk(state, 18);
  EXPECT_NE(a[0], c[0]);
  CmaState later = state;
  later.generation = 1;
  EXPECT_NE(a[0], CmaAsk(later, 17)[0]);
}

TEST(CmaTellTest, TiesKeepCandidateOrder) {
  const CmaState state = CmaInit(Eigen::VectorXd::Zero(3), 0.7);
  const auto cands = CmaAsk(state, 2);
  const std::vector<double> fit(cands.size(), 1.5);
  const CmaState next = CmaTell(state, cands, fit);
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(3);
  for (int i = 0; i < state.params.mu; ++i) {
    expected += state.params.weights(i) * cands[i];
  }
  EXPECT_LT((next.mean - expected).norm(), 1e-12);
}

TEST(CmaTellTest, NonFiniteFitnessRanksLast) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> f = {1.0, nan, 2.0, -inf, 2.0, inf};
  EXPECT_THAT(RankDescending(f), ElementsAre(2, 4, 0, 1, 3, 5));
}

TEST(CmaTellTest, SelectsTheBestParents) {
  CmaState state = CmaInit(Eigen::VectorXd::Zero(2), 1.0, 4);
  std::vector<Eigen::VectorXd> cands = {
      Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1), Eigen::Vector2d(-1, 0),
      Eigen::Vector2d(0, -1)};
  const std::vector<double> fit = {0.0, 3.0, 1.0, -5.0};
  const CmaState next = CmaTell(state, cands, fit);
  const Eigen::VectorXd expected = state.params.weights(0) * cands[1] +
                                   state.params.weights(1) * cands[2];
  EXPECT_LT((next.mean - expected).norm(), 1e-12);
  EXPECT_THROW(CmaTell(state, std::span(cands).first(3),
                       std::span(fit).first(3)),
               Error);
}

TEST(CmaPropertyTest, CovarianceStaysSymmetricPositiveDefinite) {
  CmaState state = CmaInit(Eigen::VectorXd::Constant(4, 0.0), 0.3);
  for (int g = 0; g < 300; ++g) {
    const auto cands = CmaAsk(state, 42);
    std::vector<double> fit;
    for (const auto& c : cands) fit.push_back(testing::NegatedRosenbrock(c));
    state = CmaTell(state, cands, fit);
    const Eigen::MatrixXd& c = state.covariance;
    ASSERT_TRUE((c - c.transpose()).isZero(0.0)) << "generation " << g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    ASSERT_GT(lo, 0.0);
    ASSERT_GE(lo, kCovarianceFloor * hi * (1.0 - 1e-6));
    ASSERT_GT(state.sigma, 0.0);
  }
}

TEST(CmaConvergenceTest, Sphere) {
  ObjectiveHandle f{5, testing::Sphere, 5000, {}, {}};
  OptimizeOptions options;
  options.sigma0 = 0.5;
  const OptimizeResult r =
      Optimize(f, Method::kCmaes, Eigen::VectorXd::Ones(5), options);
  EXPECT_LE(r.evaluations(), 5000);
  EXPECT_GT(r.best_fitness, -1e-10);
}

TEST(CmaConvergenceTest, Rosenbrock) {
  ObjectiveHandle f{4, testing::NegatedRosenbrock, 30000, {}, {}};
  OptimizeOptions options;
  options.sigma0 = 0.3;
  const OptimizeResult r =
      Optimize(f, Method::kCmaes, Eigen::VectorXd::Zero(4), options);
  EXPECT_LE(r.evaluations(), 30000);
  EXPECT_GT(r.best_fitness, -1e-6);
  EXPECT_LT((r.best_params - Eigen::VectorXd::Ones(4)).norm(), 1e-2);
}

}  // namespace
}  // namespace ridm

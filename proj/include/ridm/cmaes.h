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

// CMA-ES with rank-one and rank-mu covariance updates and cumulative step
// size adaptation, in ask/tell form. Fitness is MAXIMIZED.

#ifndef RIDM_CMAES_H_
#define RIDM_CMAES_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ridm {

// strategy constants, default values derived from the dimension
struct CmaParameters {
  int dimension = 0;
  int lambda = 0;
  int mu = 0;
  Eigen::VectorXd weights;
  double mu_eff = 0.0;
  double c_sigma = 0.0;
  double d_sigma = 0.0;
  double c_c = 0.0;
  double c_1 = 0.0;
  double c_mu = 0.0;
  // E||N(0, I)||
  double chi_n = 0.0;

  // lambda <= 0 selects 4 + floor(3 ln n)
  static CmaParameters Defaults(int dimension, int lambda = 0);
};

// relative eigenvalue floor applied after every covariance update
inline constexpr double kCovarianceFloor = 1e-14;

struct CmaState {
  CmaParameters params;
  Eigen::VectorXd mean;
  double sigma = 1.0;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd p_sigma;
  Eigen::VectorXd p_c;
  int generation = 0;
  // covariance = basis * diag(scales^2) * basis^T
  Eigen::MatrixXd basis;
  Eigen::VectorXd scales;
};

CmaState CmaInit(const Eigen::VectorXd& mean, double sigma, int lambda = 0);

// lambda samples from N(mean, sigma^2 C), a pure function of (state, seed)
std::vector<Eigen::VectorXd> CmaAsk(const CmaState& state, uint64_t seed);

// Candidates are ranked by descending fitness with a stable sort (ties keep
// candidate order); non-finite fitness ranks last.
CmaState CmaTell(const CmaState& state,
                 std::span<const Eigen::VectorXd> candidates,
                 std::span<const double> fitnesses);

// ranking used by CmaTell, best first
std::vector<int> RankDescending(std::span<const double> fitnesses);

}  // namespace ridm

#endif  // RIDM_CMAES_H_

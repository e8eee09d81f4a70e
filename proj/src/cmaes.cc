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

#include "ridm/cmaes.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "ridm/types.h"

namespace ridm {

namespace {

// symmetrize, floor the spectrum and cache the factorization
void Refactor(CmaState& state) {
  Eigen::MatrixXd c = 0.5 * (state.covariance + state.covariance.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
  Eigen::VectorXd values = eig.eigenvalues();
  Eigen::MatrixXd vectors = eig.eigenvectors();
  if (eig.info() != Eigen::Success || !values.allFinite()) {
    // unrecoverable numerics, restart the shape from the identity
    values.setOnes();
    vectors.setIdentity();
  }
  const double max_value = std::max(values.maxCoeff(), 1e-300);
  values = values.cwiseMax(kCovarianceFloor * max_value);
  state.covariance = vectors * values.asDiagonal() * vectors.transpose();
  state.covariance = (0.5 * (state.covariance + state.covariance.transpose())).eval();
  state.basis = vectors;
  state.scales = values.cwiseSqrt();
}

}  // namespace

CmaParameters CmaParameters::Defaults(int dimension, int lambda) {
  if (dimension < 1) throw Error("cma-es: dimension must be positive");
  CmaParameters p;
  const double n = dimension;
  p.dimension = dimension;
  p.lambda = lambda > 0 ? lambda
                        : 4 + static_cast<int>(std::floor(3.0 * std::log(n)));
  if (p.lambda < 2) p.lambda = 2;
  p.mu = p.lambda / 2;

  p.weights.resize(p.mu);
  for (int i = 0; i < p.mu; ++i) {
    p.weights(i) = std::log(p.mu + 0.5) - std::log(i + 1.0);
  }
  p.weights /= p.weights.sum();
  p.mu_eff = 1.0 / p.weights.squaredNorm();

  p.c_sigma = (p.mu_eff + 2.0) / (n + p.mu_eff + 5.0);
  p.d_sigma =
      1.0 +
      2.0 * std::max(0.0, std::sqrt((p.mu_eff - 1.0) / (n + 1.0)) - 1.0) +
      p.c_sigma;
  p.c_c = (4.0 + p.mu_eff / n) / (n + 4.0 + 2.0 * p.mu_eff / n);
  p.c_1 = 2.0 / ((n + 1.3) * (n + 1.3) + p.mu_eff);
  p.c_mu = std::min(1.0 - p.c_1, 2.0 * (p.mu_eff - 2.0 + 1.0 / p.mu_eff) /
                                     ((n + 2.0) * (n + 2.0) + p.mu_eff));
  p.chi_n = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));
  return p;
}

CmaState CmaInit(const Eigen::VectorXd& mean, double sigma, int lambda) {
  if (!(sigma > 0.0)) throw Error("cma-es: sigma must be positive");
  if (!mean.allFinite()) throw Error("cma-es: non-finite initial mean");
  CmaState state;
  const int n = static_cast<int>(mean.size());
  state.params = CmaParameters::Defaults(n, lambda);
  state.mean = mean;
  state.sigma = sigma;
  state.covariance = Eigen::MatrixXd::Identity(n, n);
  state.p_sigma = Eigen::VectorXd::Zero(n);
  state.p_c = Eigen::VectorXd::Zero(n);
  state.basis = Eigen::MatrixXd::Identity(n, n);
  state.scales = Eigen::VectorXd::Ones(n);
  return state;
}

std::vector<Eigen::VectorXd> CmaAsk(const CmaState& state, uint64_t seed) {
  const int n = state.params.dimension;
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(state.generation)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<Eigen::VectorXd> candidates;
  candidates.reserve(state.params.lambda);
  for (int k = 0; k < state.params.lambda; ++k) {
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = normal(rng);
    Eigen::VectorXd y = state.basis * state.scales.cwiseProduct(z);
    candidates.push_back(state.mean + state.sigma * y);
  }
  return candidates;
}

std::vector<int> RankDescending(std::span<const double> fitnesses) {
  std::vector<int> order(fitnesses.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool fa = std::isfinite(fitnesses[a]);
    const bool fb = std::isfinite(fitnesses[b]);
    if (fa != fb) return fa;
    if (!fa) return false;
    return fitnesses[a] > fitnesses[b];
  });
  return order;
}

CmaState CmaTell(const CmaState& state,
                 std::span<const Eigen::VectorXd> candidates,
                 std::span<const double> fitnesses) {
  const CmaParameters& p = state.params;
  const int n = p.dimension;
  if (static_cast<int>(candidates.size()) != p.lambda ||
      static_cast<int>(fitnesses.size()) != p.lambda) {
    throw Error("cma-es: tell expects " + std::to_string(p.lambda) +
                " candidates and fitnesses");
  }
  std::vector<int> order = RankDescending(fitnesses);

  // steps of the selected parents in units of sigma
  Eigen::MatrixXd steps(n, p.mu);
  for (int i = 0; i < p.mu; ++i) {
    steps.col(i) = (candidates[order[i]] - state.mean) / state.sigma;
  }
  const Eigen::VectorXd y_w = steps * p.weights;

  CmaState next = state;
  next.mean = state.mean + state.sigma * y_w;

  // C^{-1/2} y_w through the cached factorization
  const Eigen::VectorXd inv_sqrt_y =
      state.basis *
      (state.basis.transpose() * y_w).cwiseQuotient(state.scales);
  next.p_sigma = (1.0 - p.c_sigma) * state.p_sigma +
                 std::sqrt(p.c_sigma * (2.0 - p.c_sigma) * p.mu_eff) *
                     inv_sqrt_y;

  const double ps_norm = next.p_sigma.norm();
  const double decay =
      1.0 - std::pow(1.0 - p.c_sigma, 2.0 * (state.generation + 1));
  const bool h_sigma =
      ps_norm / std::sqrt(decay) < (1.4 + 2.0 / (n + 1.0)) * p.chi_n;

  next.p_c = (1.0 - p.c_c) * state.p_c;
  if (h_sigma) {
    next.p_c += std::sqrt(p.c_c * (2.0 - p.c_c) * p.mu_eff) * y_w;
  }
  const double delta = h_sigma ? 0.0 : p.c_c * (2.0 - p.c_c);

  Eigen::MatrixXd rank_mu = steps * p.weights.asDiagonal() * steps.transpose();
  next.covariance = (1.0 + p.c_1 * delta - p.c_1 - p.c_mu) * state.covariance +
                    p.c_1 * next.p_c * next.p_c.transpose() + p.c_mu * rank_mu;

  next.sigma = state.sigma *
               std::exp((p.c_sigma / p.d_sigma) * (ps_norm / p.chi_n - 1.0));
  if (!(next.sigma > 0.0) || !std::isfinite(next.sigma)) {
    next.sigma = state.sigma;
  }
  next.generation = state.generation + 1;
  Refactor(next);
  return next;
}

}  // namespace ridm

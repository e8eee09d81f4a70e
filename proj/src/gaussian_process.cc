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

#include "ridm/gaussian_process.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ridm/random.h"
#include "ridm/types.h"

namespace ridm {

namespace {

// standardized posterior variances below this are treated as exactly zero
constexpr double kVarianceFloor = 1e-10;

constexpr int kHaltonBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

double RadicalInverse(int index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * (index % base);
    index /= base;
    f /= base;
  }
  return result;
}

double SquaredExponential(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                          double length_scale) {
  return std::exp(-(a - b).squaredNorm() /
                  (2.0 * length_scale * length_scale));
}

}  // namespace

GpState::GpState(int dimension, GpOptions options)
    : dimension_(dimension), options_(options) {
  if (dimension < 1) throw Error("gp: dimension must be positive");
  if (!(options_.length_scale > 0.0)) {
    throw Error("gp: length scale must be positive");
  }
  if (options_.noise < 0.0) throw Error("gp: negative noise");
}

void GpState::AddObservation(const Eigen::VectorXd& x, double fitness) {
  if (x.size() != dimension_) throw Error("gp: dimension mismatch");
  if (!std::isfinite(fitness)) throw Error("gp: non-finite fitness");
  observed_.push_back({x, fitness});
  const int last = static_cast<int>(observed_.size()) - 1;
  if (incumbent_ < 0 || fitness > observed_[incumbent_].fitness) {
    incumbent_ = last;
  }
  Refit();
}

const GpObservation& GpState::incumbent() const {
  if (incumbent_ < 0) throw Error("gp: no observations");
  return observed_[incumbent_];
}

void GpState::Refit() {
  const int n = static_cast<int>(observed_.size());
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y(i) = observed_[i].fitness;
  y_mean_ = y.mean();
  const double var = (y.array() - y_mean_).square().mean();
  y_scale_ = var > 0.0 ? std::sqrt(var) : 1.0;
  const Eigen::VectorXd y_std = (y.array() - y_mean_) / y_scale_;

  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      k(i, j) = k(j, i) = SquaredExponential(observed_[i].x, observed_[j].x,
                                             options_.length_scale);
    }
  }
  double jitter = options_.noise;
  while (true) {
    Eigen::MatrixXd a = k;
    a.diagonal().array() += jitter;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() == Eigen::Success) {
      chol_lower_ = llt.matrixL();
      alpha_ = llt.solve(y_std);
      jitter_ = jitter;
      return;
    }
    jitter = jitter > 0.0 ? jitter * 10.0 : 1e-12;
    if (jitter > options_.max_jitter) {
      throw Error("gp: kernel matrix ill-conditioned beyond jitter " +
                  std::to_string(options_.max_jitter));
    }
  }
}

GpPosterior GpState::Posterior(const Eigen::VectorXd& x) const {
  if (x.size() != dimension_) throw Error("gp: dimension mismatch");
  if (observed_.empty()) return {0.0, 1.0};
  // noiseless exact interpolation, free of solve roundoff
  if (options_.noise == 0.0 && jitter() == 0.0) {
    for (const GpObservation& obs : observed_) {
      if (obs.x == x) return {obs.fitness, 0.0};
    }
  }
  const int n = static_cast<int>(observed_.size());
  Eigen::VectorXd k(n);
  for (int i = 0; i < n; ++i) {
    k(i) = SquaredExponential(x, observed_[i].x, options_.length_scale);
  }
  const Eigen::VectorXd v =
      chol_lower_.triangularView<Eigen::Lower>().solve(k);
  double var = 1.0 - v.squaredNorm();
  if (var < kVarianceFloor) var = 0.0;
  GpPosterior post;
  post.mean = y_mean_ + y_scale_ * k.dot(alpha_);
  post.variance = y_scale_ * y_scale_ * var;
  return post;
}

GpPosterior GpPosteriorAt(const GpState& state, const Eigen::VectorXd& x) {
  return state.Posterior(x);
}

double ExpectedImprovement(double mean, double sd, double best) {
  const double gap = mean - best;
  if (!(sd > 0.0)) return std::max(gap, 0.0);
  const double z = gap / sd;
  const double cdf = 0.5 * std::erfc(-z / std::numbers::sqrt2);
  const double pdf =
      std::exp(-0.5 * z * z) * 0.5 * std::numbers::inv_sqrtpi *
      std::numbers::sqrt2;
  return std::max(gap * cdf + sd * pdf, 0.0);
}

double ExpectedImprovement(const GpState& state, const Eigen::VectorXd& x) {
  const GpPosterior post = state.Posterior(x);
  return ExpectedImprovement(post.mean, std::sqrt(post.variance),
                             state.incumbent().fitness);
}

Eigen::VectorXd ProposeNext(const GpState& state, uint64_t rng_seed,
                            Execution execution) {
  const int d = state.dimension();
  if (state.empty()) return Eigen::VectorXd::Constant(d, 0.5);

  // shifted Halton probes, the shift keyed by (seed, observation count)
  const uint64_t round = state.observed().size();
  Eigen::VectorXd shift(d);
  for (int j = 0; j < d; ++j) shift(j) = CounterUniform(rng_seed, round, j);
  constexpr int kBases = sizeof(kHaltonBases) / sizeof(kHaltonBases[0]);
  std::vector<Eigen::VectorXd> probes(kEiProbes, Eigen::VectorXd(d));
  for (int i = 0; i < kEiProbes; ++i) {
    for (int j = 0; j < d; ++j) {
      const double h = j < kBases ? RadicalInverse(i + 1, kHaltonBases[j])
                                  : CounterUniform(rng_seed ^ 0x5eed, i, j);
      const double u = h + shift(j);
      probes[i](j) = u - std::floor(u);
    }
  }
  const auto ei = [&](const Eigen::VectorXd& x) {
    return ExpectedImprovement(state, x);
  };
  std::vector<double> scores = EvaluateBatch(ei, probes, execution);
  const int best = static_cast<int>(
      std::max_element(scores.begin(), scores.end()) - scores.begin());

  // compass search from the best probe, first strict improvement wins
  Eigen::VectorXd x = probes[best];
  double fx = scores[best];
  double step = 0.05;
  for (int iter = 0; iter < 500 && step >= 1e-4; ++iter) {
    bool improved = false;
    for (int j = 0; j < d && !improved; ++j) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd candidate = x;
        candidate(j) = std::clamp(candidate(j) + sign * step, 0.0, 1.0);
        const double fc = ei(candidate);
        if (fc > fx) {
          x = candidate;
          fx = fc;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return x;
}

Eigen::VectorXd FromUnitCube(const ObjectiveHandle& objective,
                             const Eigen::VectorXd& unit) {
  if (objective.lower.size() != unit.size() ||
      objective.upper.size() != unit.size()) {
    throw Error("bo: objective search box does not match dimension");
  }
  return objective.lower.array() +
         unit.array() * (objective.upper - objective.lower).array();
}

Eigen::VectorXd ToUnitCube(const ObjectiveHandle& objective,
                           const Eigen::VectorXd& x) {
  if (objective.lower.size() != x.size() ||
      objective.upper.size() != x.size()) {
    throw Error("bo: objective search box does not match dimension");
  }
  Eigen::VectorXd unit = (x - objective.lower).array() /
                         (objective.upper - objective.lower).array();
  return unit.cwiseMax(0.0).cwiseMin(1.0);
}

GpState BoStep(const GpState& state, const ObjectiveHandle& objective,
               uint64_t rng_seed, Execution execution) {
  if (static_cast<int>(state.observed().size()) >= objective.budget) {
    throw Error("budget exhausted");
  }
  const Eigen::VectorXd unit = ProposeNext(state, rng_seed, execution);
  const double fitness = objective.evaluate(FromUnitCube(objective, unit));
  GpState next = state;
  next.AddObservation(unit, fitness);
  return next;
}

}  // namespace ridm

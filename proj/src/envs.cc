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

#include "ridm/envs.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "ridm/random.h"
#include "ridm/text_io.h"

namespace ridm {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<double, double>> SymmetricBounds(int n, double limit) {
  return std::vector<std::pair<double, double>>(n, {-limit, limit});
}

EnvSpec DoubleIntegratorSpec(const DoubleIntegratorParams& p) {
  EnvSpec spec;
  spec.env_id = "dint1";
  spec.joint_count = 1;
  spec.action_bounds = SymmetricBounds(1, p.force_limit);
  spec.dt = p.dt;
  spec.max_steps = p.max_steps;
  spec.revolute = false;
  spec.reward_description = "-(|x - goal| + 0.1 |v|)";
  return spec;
}

EnvSpec PendulumSpec(const PendulumParams& p) {
  EnvSpec spec;
  spec.env_id = "pend1";
  spec.joint_count = 1;
  spec.action_bounds = SymmetricBounds(1, p.torque_limit);
  spec.dt = p.dt;
  spec.max_steps = p.max_steps;
  spec.reward_description = "-wrap(angle)^2 - 0.001 torque^2";
  return spec;
}

EnvSpec ReacherSpec(const ReacherParams& p) {
  EnvSpec spec;
  spec.env_id = p.env_id;
  spec.joint_count = static_cast<int>(p.link_lengths.size());
  spec.action_bounds = SymmetricBounds(spec.joint_count, p.torque_limit);
  spec.dt = p.dt;
  spec.max_steps = p.max_steps;
  spec.reward_description = "-|end_effector - target|";
  return spec;
}

// absolute link orientations phi_i = sum_{j <= i} q_j
std::vector<double> LinkOrientations(const JointVector& q) {
  std::vector<double> phi(q.size());
  double sum = 0.0;
  for (size_t i = 0; i < q.size(); ++i) {
    sum += q[i];
    phi[i] = sum;
  }
  return phi;
}

}  // namespace

double WrapAngle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  // remainder maps to [-pi, pi]; fold -pi onto pi
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

void EnvSpec::Validate() const {
  if (!(dt > 0.0)) throw Error("env spec: dt must be positive");
  if (max_steps < 2) throw Error("env spec: max_steps must be >= 2");
  if (static_cast<int>(action_bounds.size()) != joint_count) {
    throw Error("env spec: one action bound per joint required");
  }
  for (const auto& [lo, hi] : action_bounds) {
    if (!(lo < hi)) throw Error("env spec: empty action bound");
  }
}

std::string EnvSpec::Dump() const {
  std::ostringstream out;
  out << "env_id: " << env_id << "\n"
      << "joint_count: " << joint_count << "\n"
      << "action_bounds:";
  for (const auto& [lo, hi] : action_bounds) {
    out << " [" << FormatDouble(lo) << ", " << FormatDouble(hi) << "]";
  }
  out << "\n"
      << "dt: " << FormatDouble(dt) << "\n"
      << "max_steps: " << max_steps << "\n"
      << "joints: " << (revolute ? "revolute" : "prismatic") << "\n"
      << "integrator: " << integrator << "\n"
      << "reward: " << reward_description << "\n";
  return out.str();
}

Environment::Environment(EnvSpec spec) : spec_(std::move(spec)) {
  spec_.Validate();
}

ActionVector Environment::Clamp(const ActionVector& action) const {
  if (static_cast<int>(action.size()) != spec_.joint_count) {
    throw Error("action has " + std::to_string(action.size()) +
                " entries, environment " + spec_.env_id + " expects " +
                std::to_string(spec_.joint_count));
  }
  ActionVector clamped(action.size());
  for (size_t j = 0; j < action.size(); ++j) {
    const auto [lo, hi] = spec_.action_bounds[j];
    // NaN maps to zero torque so the state stays finite
    double a = std::isnan(action[j]) ? 0.0 : action[j];
    clamped[j] = std::clamp(a, lo, hi);
  }
  return clamped;
}

StepResult Environment::Step(const EnvState& state,
                             const ActionVector& action) const {
  if (static_cast<int>(state.angles.size()) != spec_.joint_count ||
      state.velocities.size() != state.angles.size()) {
    throw Error("state dimension does not match environment " +
                spec_.env_id);
  }
  ActionVector torque = Clamp(action);
  StepResult result;
  result.state = Integrate(state, torque);
  result.state.step = state.step + 1;
  result.reward = Reward(result.state, torque);
  result.done = result.state.step >= spec_.max_steps;
  return result;
}

// ---------------------------------------------------------------- dint1

DoubleIntegrator::DoubleIntegrator(const DoubleIntegratorParams& params)
    : Environment(DoubleIntegratorSpec(params)), params_(params) {}

EnvState DoubleIntegrator::Reset(uint64_t seed) const {
  EnvState state;
  state.angles = {0.0};
  state.velocities = {0.0};
  double goal = params_.goal;
  if (seed != 0) goal = 0.5 + CounterUniform(seed, 0xd1, 0);
  state.aux = {goal};
  return state;
}

ActionVector DoubleIntegrator::ExpertAction(const EnvState& state) const {
  double u = params_.expert_kp * (state.aux[0] - state.angles[0]) -
             params_.expert_kd * state.velocities[0];
  return {u};
}

EnvState DoubleIntegrator::Integrate(const EnvState& state,
                                     const ActionVector& torque) const {
  EnvState next = state;
  next.velocities[0] += params_.dt * torque[0] / params_.mass;
  next.angles[0] += params_.dt * next.velocities[0];
  return next;
}

double DoubleIntegrator::Reward(const EnvState& next,
                                const ActionVector&) const {
  return -(std::abs(next.angles[0] - next.aux[0]) +
           0.1 * std::abs(next.velocities[0]));
}

// ---------------------------------------------------------------- pend1

Pendulum::Pendulum(const PendulumParams& params)
    : Environment(PendulumSpec(params)), params_(params) {}

EnvState Pendulum::Reset(uint64_t seed) const {
  EnvState state;
  double angle = kPi;
  if (seed != 0) angle += 0.2 * (CounterUniform(seed, 0xbe, 0) - 0.5);
  state.angles = {angle};
  state.velocities = {0.0};
  return state;
}

double Pendulum::Energy(const EnvState& state) const {
  const double inertia = params_.mass * params_.length * params_.length;
  const double omega = state.velocities[0];
  return 0.5 * inertia * omega * omega +
         params_.mass * params_.gravity * params_.length *
             (1.0 + std::cos(state.angles[0]));
}

ActionVector Pendulum::ExpertAction(const EnvState& state) const {
  const double angle = WrapAngle(state.angles[0]);
  const double omega = state.velocities[0];
  if (std::abs(angle) < params_.catch_angle) {
    return {-params_.catch_kp * angle - params_.catch_kd * omega};
  }
  // pump until the upright energy is reached, then coast
  const double upright =
      2.0 * params_.mass * params_.gravity * params_.length;
  if (Energy(state) >= upright) return {0.0};
  return {omega >= 0.0 ? params_.torque_limit : -params_.torque_limit};
}

EnvState Pendulum::Integrate(const EnvState& state,
                             const ActionVector& torque) const {
  const double inertia = params_.mass * params_.length * params_.length;
  const double omega = state.velocities[0];
  const double accel =
      params_.gravity / params_.length * std::sin(state.angles[0]) +
      (torque[0] - params_.damping * omega) / inertia;
  EnvState next = state;
  next.velocities[0] = omega + params_.dt * accel;
  next.angles[0] = state.angles[0] + params_.dt * next.velocities[0];
  return next;
}

double Pendulum::Reward(const EnvState& next,
                        const ActionVector& torque) const {
  const double d = WrapAngle(next.angles[0]);
  return -d * d - 0.001 * torque[0] * torque[0];
}

// ---------------------------------------------------------------- reachers

ReacherParams Reacher2Params() { return ReacherParams{}; }

ReacherParams Reacher3Params() {
  ReacherParams p;
  p.env_id = "reacher3";
  p.link_lengths = {0.4, 0.3, 0.25};
  p.link_masses = {1.0, 0.7, 0.5};
  p.armature = 0.08;
  p.target_x = 0.2;
  p.target_y = 0.6;
  p.ik_seed = {0.5, 0.8, 0.8};
  return p;
}

PlanarReacher::PlanarReacher(ReacherParams params)
    : Environment(ReacherSpec(params)), params_(std::move(params)) {
  if (params_.link_masses.size() != params_.link_lengths.size() ||
      params_.ik_seed.size() != params_.link_lengths.size()) {
    throw Error("reacher: inconsistent link parameters");
  }
}

EnvState PlanarReacher::Reset(uint64_t seed) const {
  const size_t n = params_.link_lengths.size();
  EnvState state;
  state.angles.assign(n, 0.0);
  state.velocities.assign(n, 0.0);
  double tx = params_.target_x;
  double ty = params_.target_y;
  if (seed != 0) {
    double reach = 0.0;
    for (double l : params_.link_lengths) reach += l;
    const double radius =
        (0.35 + 0.5 * CounterUniform(seed, 0x7a, 0)) * reach;
    const double heading = kPi * (CounterUniform(seed, 0x7a, 1) - 0.5);
    tx = radius * std::cos(heading + 0.5 * kPi - 0.5);
    ty = radius * std::sin(heading + 0.5 * kPi - 0.5);
  }
  state.aux = {tx, ty};
  return state;
}

std::pair<double, double> PlanarReacher::EndEffector(
    const JointVector& angles) const {
  std::vector<double> phi = LinkOrientations(angles);
  double x = 0.0, y = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) {
    x += params_.link_lengths[i] * std::cos(phi[i]);
    y += params_.link_lengths[i] * std::sin(phi[i]);
  }
  return {x, y};
}

JointVector PlanarReacher::SolveIk(double target_x, double target_y) const {
  const int n = static_cast<int>(params_.link_lengths.size());
  Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(
      params_.ik_seed.data(), n);
  const double lambda = 1e-3;
  for (int iter = 0; iter < 200; ++iter) {
    JointVector qv(q.data(), q.data() + n);
    std::vector<double> phi = LinkOrientations(qv);
    auto [x, y] = EndEffector(qv);
    Eigen::Vector2d err(target_x - x, target_y - y);
    if (err.norm() < 1e-12) break;
    Eigen::MatrixXd jac(2, n);
    for (int j = 0; j < n; ++j) {
      double dx = 0.0, dy = 0.0;
      for (int i = j; i < n; ++i) {
        dx -= params_.link_lengths[i] * std::sin(phi[i]);
        dy += params_.link_lengths[i] * std::cos(phi[i]);
      }
      jac(0, j) = dx;
      jac(1, j) = dy;
    }
    Eigen::Matrix2d jjt = jac * jac.transpose();
    jjt.diagonal().array() += lambda;
    q += jac.transpose() * jjt.ldlt().solve(err);
  }
  return JointVector(q.data(), q.data() + n);
}

ActionVector PlanarReacher::ExpertAction(const EnvState& state) const {
  JointVector goal = SolveIk(state.aux[0], state.aux[1]);
  ActionVector u(goal.size());
  for (size_t j = 0; j < goal.size(); ++j) {
    u[j] = params_.expert_kp * WrapAngle(goal[j] - state.angles[j]) -
           params_.expert_kd * state.velocities[j];
  }
  return u;
}

EnvState PlanarReacher::Integrate(const EnvState& state,
                                  const ActionVector& torque) const {
  const int n = static_cast<int>(params_.link_lengths.size());
  std::vector<double> phi = LinkOrientations(state.angles);
  std::vector<double> omega(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += state.velocities[i];
    omega[i] = sum;
  }

  // M(q) qdd + bias(q, qd) = tau - b qd, with M = sum_k m_k J_k^T J_k and
  // bias = sum_k m_k J_k^T a_k, a_k the velocity-product tip acceleration
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd bias = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2, n);
    for (int j = 0; j <= k; ++j) {
      for (int i = j; i <= k; ++i) {
        jac(0, j) -= params_.link_lengths[i] * std::sin(phi[i]);
        jac(1, j) += params_.link_lengths[i] * std::cos(phi[i]);
      }
    }
    Eigen::Vector2d accel = Eigen::Vector2d::Zero();
    for (int i = 0; i <= k; ++i) {
      const double w2 = omega[i] * omega[i];
      accel(0) -= params_.link_lengths[i] * w2 * std::cos(phi[i]);
      accel(1) -= params_.link_lengths[i] * w2 * std::sin(phi[i]);
    }
    mass += params_.link_masses[k] * jac.transpose() * jac;
    bias += params_.link_masses[k] * jac.transpose() * accel;
  }
  mass.diagonal().array() += params_.armature;

  Eigen::VectorXd rhs(n);
  for (int j = 0; j < n; ++j) {
    rhs(j) = torque[j] - params_.damping * state.velocities[j] - bias(j);
  }
  Eigen::VectorXd qdd = mass.ldlt().solve(rhs);

  EnvState next = state;
  for (int j = 0; j < n; ++j) {
    next.velocities[j] = state.velocities[j] + params_.dt * qdd(j);
    next.angles[j] = state.angles[j] + params_.dt * next.velocities[j];
  }
  return next;
}

double PlanarReacher::Reward(const EnvState& next,
                             const ActionVector&) const {
  auto [x, y] = EndEffector(next.angles);
  return -std::hypot(x - next.aux[0], y - next.aux[1]);
}

// ---------------------------------------------------------------- registry

std::shared_ptr<const Environment> MakeEnvironment(std::string_view env_id) {
  if (env_id == "dint1") return std::make_shared<DoubleIntegrator>();
  if (env_id == "pend1") return std::make_shared<Pendulum>();
  if (env_id == "reacher2") {
    return std::make_shared<PlanarReacher>(Reacher2Params());
  }
  if (env_id == "reacher3") {
    return std::make_shared<PlanarReacher>(Reacher3Params());
  }
  std::string known;
  for (const std::string& id : KnownEnvironments()) {
    known += known.empty() ? id : ", " + id;
  }
  throw Error("unknown environment '" + std::string(env_id) +
              "' (known: " + known + ")");
}

std::vector<std::string> KnownEnvironments() {
  return {"dint1", "pend1", "reacher2", "reacher3"};
}

// ---------------------------------------------------------------- policies

ActionVector PolicyAction(const Environment& env, const PolicyHandle& policy,
                          const EnvState& state) {
  const EnvSpec& spec = env.spec();
  switch (policy.kind) {
    case PolicyKind::kScriptedExpert:
      return env.ExpertAction(state);
    case PolicyKind::kExploration: {
      ActionVector a = env.Clamp(env.ExpertAction(state));
      for (int j = 0; j < spec.joint_count; ++j) {
        const auto [lo, hi] = spec.action_bounds[j];
        const double u = CounterUniform(policy.seed, state.step, j);
        a[j] += policy.noise_fraction * 0.5 * (hi - lo) * (2.0 * u - 1.0);
      }
      return a;
    }
    case PolicyKind::kRandom: {
      ActionVector a(spec.joint_count);
      for (int j = 0; j < spec.joint_count; ++j) {
        const auto [lo, hi] = spec.action_bounds[j];
        a[j] = lo + (hi - lo) * CounterUniform(policy.seed, state.step, j);
      }
      return a;
    }
  }
  throw Error("unknown policy kind");
}

RolloutRecord RolloutPolicy(const Environment& env, const PolicyHandle& policy,
                            uint64_t seed, int steps) {
  if (steps < 0 || steps > env.spec().max_steps) {
    throw Error("rollout: steps must lie in [0, max_steps]");
  }
  RolloutRecord record;
  EnvState state = env.Reset(seed);
  record.states.push_back(state.angles);
  for (int t = 0; t < steps; ++t) {
    ActionVector action = env.Clamp(PolicyAction(env, policy, state));
    StepResult result = env.Step(state, action);
    state = std::move(result.state);
    record.states.push_back(state.angles);
    record.actions.push_back(std::move(action));
    record.rewards.push_back(result.reward);
    if (result.done && t + 1 < steps) {
      record.terminated_early = true;
      break;
    }
  }
  record.cumulative_reward = SumRewards(record.rewards);
  return record;
}

RolloutRecord RolloutPolicy(std::string_view env_id,
                            const PolicyHandle& policy, uint64_t seed,
                            int steps) {
  return RolloutPolicy(*MakeEnvironment(env_id), policy, seed, steps);
}

Demonstration RecordDemonstration(const RolloutRecord& record,
                                  std::string_view env_id, double dt,
                                  std::string_view source) {
  Demonstration demo;
  demo.env_id = std::string(env_id);
  demo.dt = dt;
  demo.states = record.states;
  demo.source = std::string(source);
  demo.Validate();
  return demo;
}

}  // namespace ridm

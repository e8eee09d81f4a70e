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

// Deterministic toy control environments and their reference policies.
//
//   dint1     1-D double integrator, reward -(|x - goal| + 0.1 |v|)
//   pend1     torque-limited pendulum swing-up, angle 0 is upright,
//             reward -wrap(angle)^2 - 0.001 torque^2
//   reacher2  2-link planar reacher (no gravity), reward -|tip - target|
//   reacher3  3-link planar reacher (no gravity), reward -|tip - target|
//
// All environments integrate with semi-implicit Euler at a fixed dt and
// terminate only at max_steps. Step() is a pure function of (state, action).

#ifndef RIDM_ENVS_H_
#define RIDM_ENVS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ridm/types.h"

namespace ridm {

struct EnvState {
  JointVector angles;
  std::vector<double> velocities;
  // environment specific: goal position (dint1), target x, y (reachers)
  std::vector<double> aux;
  int step = 0;

  bool operator==(const EnvState&) const = default;
};

struct EnvSpec {
  std::string env_id;
  int joint_count = 1;
  std::vector<std::pair<double, double>> action_bounds;
  double dt = 0.02;
  int max_steps = 100;
  // revolute joints use wrapped angle differences
  bool revolute = true;
  std::string integrator = "semi-implicit-euler";
  std::string reward_description;

  void Validate() const;
  // key: value lines, for documentation
  std::string Dump() const;
};

struct StepResult {
  EnvState state;
  double reward = 0.0;
  bool done = false;
};

// wraps an angle difference into (-pi, pi]
double WrapAngle(double angle);

class Environment {
 public:
  explicit Environment(EnvSpec spec);
  virtual ~Environment() = default;

  const EnvSpec& spec() const { return spec_; }

  // deterministic initial state; seed 0 is the canonical evaluation seed
  virtual EnvState Reset(uint64_t seed) const = 0;

  // clamps the action to bounds, integrates one dt, evaluates the reward on
  // the resulting state; throws Error on dimension mismatch
  StepResult Step(const EnvState& state, const ActionVector& action) const;

  ActionVector Clamp(const ActionVector& action) const;

  virtual ActionVector ExpertAction(const EnvState& state) const = 0;

 protected:
  virtual EnvState Integrate(const EnvState& state,
                             const ActionVector& torque) const = 0;
  virtual double Reward(const EnvState& next,
                        const ActionVector& torque) const = 0;

 private:
  EnvSpec spec_;
};

struct DoubleIntegratorParams {
  double dt = 0.02;
  int max_steps = 150;
  double mass = 1.0;
  double force_limit = 1.0;
  double goal = 1.0;
  // expert PD law
  double expert_kp = 4.0;
  double expert_kd = 3.0;
};

class DoubleIntegrator : public Environment {
 public:
  explicit DoubleIntegrator(const DoubleIntegratorParams& params = {});
  EnvState Reset(uint64_t seed) const override;
  ActionVector ExpertAction(const EnvState& state) const override;
  const DoubleIntegratorParams& params() const { return params_; }

 protected:
  EnvState Integrate(const EnvState& state,
                     const ActionVector& torque) const override;
  double Reward(const EnvState& next,
                const ActionVector& torque) const override;

 private:
  DoubleIntegratorParams params_;
};

struct PendulumParams {
  double dt = 0.01;
  int max_steps = 400;
  double mass = 1.0;
  double length = 3.0;
  double gravity = 9.81;
  double damping = 0.1;
  double torque_limit = 25.0;
  // expert: bang-bang energy pumping, PD catch near upright
  double catch_angle = 0.5;
  double catch_kp = 150.0;
  double catch_kd = 45.0;
};

class Pendulum : public Environment {
 public:
  explicit Pendulum(const PendulumParams& params = {});
  EnvState Reset(uint64_t seed) const override;
  ActionVector ExpertAction(const EnvState& state) const override;
  const PendulumParams& params() const { return params_; }

  // kinetic plus potential energy, zero at rest hanging straight down
  double Energy(const EnvState& state) const;

 protected:
  EnvState Integrate(const EnvState& state,
                     const ActionVector& torque) const override;
  double Reward(const EnvState& next,
                const ActionVector& torque) const override;

 private:
  PendulumParams params_;
};

// Planar serial chain in the horizontal plane with point masses at the link
// tips, viscous joint damping and rotor armature.
struct ReacherParams {
  std::string env_id = "reacher2";
  std::vector<double> link_lengths = {0.5, 0.4};
  std::vector<double> link_masses = {1.0, 0.8};
  double damping = 0.1;
  double armature = 0.01;
  double torque_limit = 3.0;
  double dt = 0.02;
  int max_steps = 150;
  // canonical target for seed 0
  double target_x = -0.1;
  double target_y = 0.7;
  // expert: PD toward the inverse-kinematics solution
  double expert_kp = 20.0;
  double expert_kd = 6.0;
  // initial guess for the iterative IK solve
  std::vector<double> ik_seed = {0.5, 1.0};
};

ReacherParams Reacher2Params();
ReacherParams Reacher3Params();

class PlanarReacher : public Environment {
 public:
  explicit PlanarReacher(ReacherParams params);
  EnvState Reset(uint64_t seed) const override;
  ActionVector ExpertAction(const EnvState& state) const override;
  const ReacherParams& params() const { return params_; }

  std::pair<double, double> EndEffector(const JointVector& angles) const;
  // damped least-squares IK from params().ik_seed
  JointVector SolveIk(double target_x, double target_y) const;

 protected:
  EnvState Integrate(const EnvState& state,
                     const ActionVector& torque) const override;
  double Reward(const EnvState& next,
                const ActionVector& torque) const override;

 private:
  ReacherParams params_;
};

// registry of bundled environments, addressed by env_id
std::shared_ptr<const Environment> MakeEnvironment(std::string_view env_id);
std::vector<std::string> KnownEnvironments();

enum class PolicyKind { kScriptedExpert, kExploration, kRandom };

// Reference policies. Random draws uniform torques within bounds from a
// counter-based generator keyed by (seed, step, joint); Exploration is the
// expert plus uniform noise of `noise_fraction` of each bound's half-width.
struct PolicyHandle {
  PolicyKind kind = PolicyKind::kScriptedExpert;
  uint64_t seed = 0;
  double noise_fraction = 0.3;
};

ActionVector PolicyAction(const Environment& env, const PolicyHandle& policy,
                          const EnvState& state);

// runs `policy` closed-loop for `steps` steps from Reset(seed)
RolloutRecord RolloutPolicy(const Environment& env, const PolicyHandle& policy,
                            uint64_t seed, int steps);
RolloutRecord RolloutPolicy(std::string_view env_id,
                            const PolicyHandle& policy, uint64_t seed,
                            int steps);

// keeps the joint-angle sequence of `record` and nothing else
Demonstration RecordDemonstration(const RolloutRecord& record,
                                  std::string_view env_id, double dt,
                                  std::string_view source = "scripted-expert");

}  // namespace ridm

#endif  // RIDM_ENVS_H_

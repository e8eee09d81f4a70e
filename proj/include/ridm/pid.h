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

// PID inverse dynamics model: maps (current state, desired next state) to the
// action that attempts to reach the set point.

#ifndef RIDM_PID_H_
#define RIDM_PID_H_

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "ridm/envs.h"
#include "ridm/types.h"

namespace ridm {

inline constexpr double kDefaultIntegralClamp = 10.0;

struct PidOptions {
  // symmetric anti-windup bound on each joint's integral (rad s)
  double integral_clamp = kDefaultIntegralClamp;
  // wrap errors into (-pi, pi] for revolute joints
  bool wrap_errors = true;
};

struct PidState {
  std::vector<double> integral;
  std::vector<double> prev_error;
  // false until the first IdmAction of an episode
  bool initialized = false;

  bool operator==(const PidState&) const = default;
};

PidState ResetPid(int joint_count);

struct IdmOutput {
  ActionVector action;
  PidState state;
};

// Per joint, with e = setpoint - current (wrapped when revolute):
//   I <- clamp(I + e dt),  u = Kp e + Ki I + Kd (e - e_prev) / dt
// The derivative contribution is zero on the first call after ResetPid().
// The output is not clamped to action bounds.
IdmOutput IdmAction(const GainParams& gains, const PidState& state,
                    const JointVector& current, const JointVector& setpoint,
                    double dt, const PidOptions& options = {});

// called with (t, setpoint) before each tracking step
using SetpointObserver = std::function<void(int, const JointVector&)>;

// Resets the environment and the PID state, then for t = 0 .. |demo| - 2
// drives the learner toward demo.states[t + 1], clamping each action to the
// environment's bounds. Set points advance with t regardless of how far the
// learner drifts from the demonstration.
RolloutRecord TrackDemonstration(const Environment& env,
                                 const Demonstration& demo,
                                 const GainParams& gains, uint64_t seed,
                                 const SetpointObserver& observer = {});
RolloutRecord TrackDemonstration(std::string_view env_id,
                                 const Demonstration& demo,
                                 const GainParams& gains, uint64_t seed);

// PidOptions matching an environment's joint type
PidOptions PidOptionsFor(const EnvSpec& spec);

}  // namespace ridm

#endif  // RIDM_PID_H_

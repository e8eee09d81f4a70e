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

#include "ridm/pid.h"

#include <algorithm>
#include <string>

namespace ridm {

PidState ResetPid(int joint_count) {
  if (joint_count < 1) throw Error("pid: joint_count must be positive");
  PidState state;
  state.integral.assign(joint_count, 0.0);
  state.prev_error.assign(joint_count, 0.0);
  state.initialized = false;
  return state;
}

IdmOutput IdmAction(const GainParams& gains, const PidState& state,
                    const JointVector& current, const JointVector& setpoint,
                    double dt, const PidOptions& options) {
  const size_t n = current.size();
  if (setpoint.size() != n || state.integral.size() != n ||
      state.prev_error.size() != n ||
      static_cast<size_t>(gains.joint_count) != n) {
    throw Error("idm: dimension mismatch");
  }
  if (!(dt > 0.0)) throw Error("idm: dt must be positive");

  IdmOutput out;
  out.action.resize(n);
  out.state = state;
  const double limit = options.integral_clamp;
  for (size_t j = 0; j < n; ++j) {
    const JointGains g = GainsForJoint(gains, static_cast<int>(j));
    double error = setpoint[j] - current[j];
    if (options.wrap_errors) error = WrapAngle(error);

    double u = g.kp * error;
    if (gains.terms == GainTerms::kPID) {
      out.state.integral[j] =
          std::clamp(state.integral[j] + error * dt, -limit, limit);
      u += g.ki * out.state.integral[j];
    }
    if (gains.terms != GainTerms::kP && state.initialized) {
      u += g.kd * (error - state.prev_error[j]) / dt;
    }
    out.action[j] = u;
    out.state.prev_error[j] = error;
  }
  out.state.initialized = true;
  return out;
}

PidOptions PidOptionsFor(const EnvSpec& spec) {
  PidOptions options;
  options.wrap_errors = spec.revolute;
  return options;
}

RolloutRecord TrackDemonstration(const Environment& env,
                                 const Demonstration& demo,
                                 const GainParams& gains, uint64_t seed,
                                 const SetpointObserver& observer) {
  const EnvSpec& spec = env.spec();
  if (demo.env_id != spec.env_id) {
    throw Error("demonstration is for '" + demo.env_id +
                "', environment is '" + spec.env_id + "'");
  }
  if (demo.JointCount() != spec.joint_count ||
      gains.joint_count != spec.joint_count) {
    throw Error("joint count mismatch between demonstration, gains and " +
                spec.env_id);
  }
  if (demo.states.size() < 2) throw Error("demonstration too short");
  const PidOptions options = PidOptionsFor(spec);

  RolloutRecord record;
  EnvState state = env.Reset(seed);
  PidState pid = ResetPid(spec.joint_count);
  record.states.push_back(state.angles);
  const int steps = demo.Length() - 1;
  for (int t = 0; t < steps; ++t) {
    const JointVector& setpoint = demo.states[t + 1];
    if (observer) observer(t, setpoint);
    IdmOutput out = IdmAction(gains, pid, state.angles, setpoint, spec.dt,
                              options);
    pid = std::move(out.state);
    ActionVector action = env.Clamp(out.action);
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

RolloutRecord TrackDemonstration(std::string_view env_id,
                                 const Demonstration& demo,
                                 const GainParams& gains, uint64_t seed) {
  return TrackDemonstration(*MakeEnvironment(env_id), demo, gains, seed);
}

}  // namespace ridm

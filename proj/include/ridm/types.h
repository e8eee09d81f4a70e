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

#ifndef RIDM_TYPES_H_
#define RIDM_TYPES_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ridm {

// joint angles (rad), or positions for prismatic joints
using JointVector = std::vector<double>;
// joint torques (N m), one per actuated joint
using ActionVector = std::vector<double>;

// every recoverable failure in the library is reported with this type
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A single, state-only expert demonstration. Holds joint angles and nothing
// else: no actions, no velocities.
struct Demonstration {
  std::string env_id;
  double dt = 0.0;
  std::vector<JointVector> states;
  // whitespace-free provenance label
  std::string source = "unknown";

  int JointCount() const {
    return states.empty() ? 0 : static_cast<int>(states.front().size());
  }
  int Length() const { return static_cast<int>(states.size()); }

  // throws Error when any invariant is violated
  void Validate() const;

  bool operator==(const Demonstration&) const = default;
};

enum class GainScheme { kLocal, kGlobal };
enum class GainTerms { kP, kPD, kPID };

int TermCount(GainTerms terms);
std::string_view SchemeName(GainScheme scheme);
std::string_view TermsName(GainTerms terms);
GainScheme ParseScheme(std::string_view name);
GainTerms ParseTerms(std::string_view name);

// Parameter vector of the PID inverse dynamics model, stored as base-10
// logarithms so every decoded gain is strictly positive.
//
// Term order within a gain set is (Kp), (Kp, Kd) or (Kp, Ki, Kd). Under the
// local scheme the vector is joint-major: log_gains[joint * terms + term].
struct GainParams {
  GainScheme scheme = GainScheme::kLocal;
  GainTerms terms = GainTerms::kPD;
  int joint_count = 1;
  std::vector<double> log_gains;

  static int ExpectedSize(GainScheme scheme, GainTerms terms, int joint_count);
  // all entries set to `log_gain`
  static GainParams Uniform(GainScheme scheme, GainTerms terms,
                            int joint_count, double log_gain);

  int Size() const { return static_cast<int>(log_gains.size()); }
  void Validate() const;

  bool operator==(const GainParams&) const = default;
};

// 10^log_gain for (joint, term); term indexes the scheme's own term list
double DecodeGain(const GainParams& params, int joint, int term);

struct JointGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
};

// decoded gains for one joint, absent terms are zero
JointGains GainsForJoint(const GainParams& params, int joint);

// Index-ascending sum. Every cumulative reward in the project goes through
// this so that totals are bit-reproducible.
double SumRewards(std::span<const double> rewards);

// One episode: states[0] is the reset state, states[t + 1] follows actions[t].
struct RolloutRecord {
  std::vector<JointVector> states;
  std::vector<ActionVector> actions;
  std::vector<double> rewards;
  double cumulative_reward = 0.0;
  bool terminated_early = false;

  int Steps() const { return static_cast<int>(actions.size()); }
  void Validate() const;
};

struct Transition {
  JointVector state;
  ActionVector action;
  JointVector next_state;
};

// Self-generated (s, a, s') triples along one trajectory. Action ranges are
// derived from the triples on construction.
class TransitionDataset {
 public:
  explicit TransitionDataset(std::vector<Transition> triples);

  // consecutive (s_t, a_t, s_{t+1}) triples of a recorded episode
  static TransitionDataset FromRollout(const RolloutRecord& record);

  const std::vector<Transition>& triples() const { return triples_; }
  const std::vector<std::pair<double, double>>& action_ranges() const {
    return action_ranges_;
  }
  int size() const { return static_cast<int>(triples_.size()); }
  int action_dim() const { return static_cast<int>(action_ranges_.size()); }

 private:
  std::vector<Transition> triples_;
  std::vector<std::pair<double, double>> action_ranges_;
};

}  // namespace ridm

#endif  // RIDM_TYPES_H_

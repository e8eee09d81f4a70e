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

#include "ridm/types.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace ridm {

namespace {

bool AllFinite(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

void Demonstration::Validate() const {
  if (env_id.empty()) throw Error("demonstration: empty env_id");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error("demonstration: dt must be positive");
  }
  if (states.size() < 2) {
    throw Error("demonstration: at least 2 states are required, got " +
                std::to_string(states.size()));
  }
  if (source.empty() ||
      std::any_of(source.begin(), source.end(),
                  [](unsigned char c) { return std::isspace(c); })) {
    throw Error("demonstration: source must be a non-empty token");
  }
  const size_t joints = states.front().size();
  if (joints == 0) throw Error("demonstration: zero joints");
  for (size_t t = 0; t < states.size(); ++t) {
    if (states[t].size() != joints) {
      throw Error("demonstration: state " + std::to_string(t) + " has " +
                  std::to_string(states[t].size()) + " joints, expected " +
                  std::to_string(joints));
    }
    if (!AllFinite(states[t])) {
      throw Error("demonstration: state " + std::to_string(t) +
                  " is not finite");
    }
  }
}

int TermCount(GainTerms terms) {
  switch (terms) {
    case GainTerms::kP:
      return 1;
    case GainTerms::kPD:
      return 2;
    case GainTerms::kPID:
      return 3;
  }
  return 0;
}

std::string_view SchemeName(GainScheme scheme) {
  return scheme == GainScheme::kLocal ? "local" : "global";
}

std::string_view TermsName(GainTerms terms) {
  switch (terms) {
    case GainTerms::kP:
      return "p";
    case GainTerms::kPD:
      return "pd";
    case GainTerms::kPID:
      return "pid";
  }
  return "";
}

GainScheme ParseScheme(std::string_view name) {
  if (name == "local") return GainScheme::kLocal;
  if (name == "global") return GainScheme::kGlobal;
  throw Error("unknown gain scheme '" + std::string(name) +
              "' (expected local or global)");
}

GainTerms ParseTerms(std::string_view name) {
  if (name == "p") return GainTerms::kP;
  if (name == "pd") return GainTerms::kPD;
  if (name == "pid") return GainTerms::kPID;
  throw Error("unknown gain terms '" + std::string(name) +
              "' (expected p, pd or pid)");
}

int GainParams::ExpectedSize(GainScheme scheme, GainTerms terms,
                             int joint_count) {
  return scheme == GainScheme::kLocal ? TermCount(terms) * joint_count
                                      : TermCount(terms);
}

GainParams GainParams::Uniform(GainScheme scheme, GainTerms terms,
                               int joint_count, double log_gain) {
  GainParams params;
  params.scheme = scheme;
  params.terms = terms;
  params.joint_count = joint_count;
  params.log_gains.assign(ExpectedSize(scheme, terms, joint_count), log_gain);
  return params;
}

void GainParams::Validate() const {
  if (joint_count < 1) throw Error("gains: joint_count must be positive");
  const int expected = ExpectedSize(scheme, terms, joint_count);
  if (Size() != expected) {
    throw Error("gains: expected " + std::to_string(expected) +
                " log-gains, got " + std::to_string(Size()));
  }
  if (!AllFinite(log_gains)) throw Error("gains: non-finite log-gain");
}

double DecodeGain(const GainParams& params, int joint, int term) {
  const int terms = TermCount(params.terms);
  if (joint < 0 || joint >= params.joint_count) {
    throw Error("gains: joint index " + std::to_string(joint) +
                " out of range");
  }
  if (term < 0 || term >= terms) {
    throw Error("gains: term index " + std::to_string(term) + " out of range");
  }
  const int index =
      params.scheme == GainScheme::kLocal ? joint * terms + term : term;
  if (index >= params.Size()) throw Error("gains: vector too short");
  return std::pow(10.0, params.log_gains[index]);
}

JointGains GainsForJoint(const GainParams& params, int joint) {
  JointGains gains;
  gains.kp = DecodeGain(params, joint, 0);
  switch (params.terms) {
    case GainTerms::kP:
      break;
    case GainTerms::kPD:
      gains.kd = DecodeGain(params, joint, 1);
      break;
    case GainTerms::kPID:
      gains.ki = DecodeGain(params, joint, 1);
      gains.kd = DecodeGain(params, joint, 2);
      break;
  }
  return gains;
}

double SumRewards(std::span<const double> rewards) {
  double total = 0.0;
  for (double r : rewards) total += r;
  return total;
}

void RolloutRecord::Validate() const {
  if (states.empty()) throw Error("rollout: no states");
  if (actions.size() != rewards.size() ||
      states.size() != actions.size() + 1) {
    throw Error("rollout: inconsistent record lengths");
  }
  if (cumulative_reward != SumRewards(rewards)) {
    throw Error("rollout: cumulative reward does not match reward sum");
  }
}

TransitionDataset::TransitionDataset(std::vector<Transition> triples)
    : triples_(std::move(triples)) {
  if (triples_.empty()) throw Error("transition dataset: no triples");
  const size_t action_dim = triples_.front().action.size();
  const size_t state_dim = triples_.front().state.size();
  if (action_dim == 0) throw Error("transition dataset: empty action");
  action_ranges_.resize(action_dim);
  for (size_t n = 0; n < action_dim; ++n) {
    action_ranges_[n] = {triples_.front().action[n],
                         triples_.front().action[n]};
  }
  for (size_t t = 0; t < triples_.size(); ++t) {
    const Transition& tr = triples_[t];
    if (tr.action.size() != action_dim || tr.state.size() != state_dim ||
        tr.next_state.size() != state_dim) {
      throw Error("transition dataset: ragged triple " + std::to_string(t));
    }
    for (size_t n = 0; n < action_dim; ++n) {
      action_ranges_[n].first = std::min(action_ranges_[n].first, tr.action[n]);
      action_ranges_[n].second =
          std::max(action_ranges_[n].second, tr.action[n]);
    }
  }
}

TransitionDataset TransitionDataset::FromRollout(const RolloutRecord& record) {
  std::vector<Transition> triples;
  triples.reserve(record.actions.size());
  for (size_t t = 0; t < record.actions.size(); ++t) {
    triples.push_back(
        {record.states[t], record.actions[t], record.states[t + 1]});
  }
  return TransitionDataset(std::move(triples));
}

}  // namespace ridm

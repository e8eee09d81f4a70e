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

// Experiment orchestration behind the `ridm` command line tool.

#ifndef RIDM_HARNESS_H_
#define RIDM_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ridm/optimize.h"
#include "ridm/ridm.h"
#include "ridm/types.h"

namespace ridm {

inline constexpr int kRandomAnchorEpisodes = 20;

// Reward anchors of the scaled score: the scripted expert at `seed`, and the
// uniform-torque policy (policy seeds 0..19) averaged at the same env seed.
struct ScoreAnchors {
  std::string env_id;
  uint64_t seed = 0;
  double expert_reward = 0.0;
  double random_reward = 0.0;

  void Validate() const;
  bool operator==(const ScoreAnchors&) const = default;
};

// 0 for the random policy, 1 for the expert; may exceed 1
double ScaledScore(double reward, const ScoreAnchors& anchors);

// memoized per (env_id, seed); throws Error when expert <= random
ScoreAnchors ComputeAnchors(std::string_view env_id, uint64_t seed,
                            Execution execution = Execution::kParallel);

// ScriptedExpert for max_steps, angles only
Demonstration ExpertDemonstration(std::string_view env_id, uint64_t seed);

// Flat key=value experiment description. Relative demo paths resolve
// against the directory of the file they were read from.
struct ExperimentConfig {
  std::string env_id;
  GainScheme scheme = GainScheme::kLocal;
  GainTerms terms = GainTerms::kPD;
  Method method = Method::kCmaes;
  int budget = 2000;
  uint64_t seed = 0;
  InitMode init = InitMode::kPretrained;
  int pretrain_budget = 1000;
  // empty: generate the expert demonstration at `seed`
  std::string demo_path;
  // empty: do not write an artifact directory
  std::string out_dir;

  // per-environment defaults used by `train` and `compare`
  static ExperimentConfig Defaults(std::string_view env_id);

  void Validate() const;
  // every key except `out`, demo written as given
  std::string ToText() const;
  static ExperimentConfig FromText(std::string_view text,
                                   const std::filesystem::path& base_dir = {});
};

struct TrainOutcome {
  ExperimentConfig config;
  Demonstration demo;
  ScoreAnchors anchors;
  GainParams initial_gains;
  RidmRun run;
  double scaled_score = 0.0;
};

// init_gains then reinforce_gains. With config.out_dir set, writes
// demo.txt, config.txt, history.csv, best_gains.txt and best_rollout.csv.
TrainOutcome RunTrain(const ExperimentConfig& config,
                      Execution execution = Execution::kParallel);

struct CompareRow {
  std::string agent;
  double reward = 0.0;
  double scaled_score = 0.0;
};

// expert, RIDM-tuned PID, default-gains PID (all gains 1)
std::vector<CompareRow> RunCompare(const ExperimentConfig& config,
                                   Execution execution = Execution::kParallel);
std::string CompareToCsv(const std::vector<CompareRow>& rows);

// Subcommands. Each returns a process exit status and writes a one-line
// diagnostic to `err` on failure.
int CmdDemo(std::string_view env_id, const std::filesystem::path& out_path,
            uint64_t seed, std::ostream& out, std::ostream& err);
int CmdAnchors(std::string_view env_id, uint64_t seed,
               const std::filesystem::path& out_csv, std::ostream& out,
               std::ostream& err);
int CmdPretrain(std::string_view env_id, GainScheme scheme, GainTerms terms,
                int budget, uint64_t seed,
                const std::filesystem::path& out_path, std::ostream& out,
                std::ostream& err);
int CmdTrain(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err);
int CmdCompare(const ExperimentConfig& config,
               const std::filesystem::path& out_csv, std::ostream& out,
               std::ostream& err);
int CmdEval(std::string_view env_id, const std::filesystem::path& demo_path,
            const std::filesystem::path& gains_path, uint64_t seed,
            const std::filesystem::path& rollout_csv, std::ostream& out,
            std::ostream& err);

}  // namespace ridm

#endif  // RIDM_HARNESS_H_

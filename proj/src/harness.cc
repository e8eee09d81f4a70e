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

#include "ridm/harness.h"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "ridm/envs.h"
#include "ridm/pid.h"
#include "ridm/text_io.h"

namespace ridm {

namespace fs = std::filesystem;

namespace {

std::string Trim(std::string_view s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const size_t end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

// runs `body`, mapping library errors to a one-line diagnostic
template <typename Body>
int Guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

void WriteArtifacts(const TrainOutcome& outcome, const fs::path& dir) {
  fs::create_directories(dir);
  WriteTextFile(dir / "demo.txt", EncodeDemonstration(outcome.demo));
  ExperimentConfig snapshot = outcome.config;
  snapshot.demo_path = "demo.txt";
  WriteTextFile(dir / "config.txt", snapshot.ToText());
  WriteTextFile(dir / "history.csv", HistoryToCsv(outcome.run.optimizer));
  WriteTextFile(dir / "best_gains.txt", EncodeGains(outcome.run.best_gains));
  WriteTextFile(dir / "best_rollout.csv",
                RolloutToCsv(outcome.run.best_rollout));
}

}  // namespace

void ScoreAnchors::Validate() const {
  if (!(expert_reward > random_reward)) {
    throw Error("invalid anchors for " + env_id + ": expert reward " +
                FormatDouble(expert_reward) + " does not exceed random reward " +
                FormatDouble(random_reward));
  }
}

double ScaledScore(double reward, const ScoreAnchors& anchors) {
  anchors.Validate();
  return (reward - anchors.random_reward) /
         (anchors.expert_reward - anchors.random_reward);
}

ScoreAnchors ComputeAnchors(std::string_view env_id, uint64_t seed,
                            Execution execution) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, uint64_t>, ScoreAnchors> cache;
  const auto key = std::make_pair(std::string(env_id), seed);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  auto env = MakeEnvironment(env_id);
  const int steps = env->spec().max_steps;
  ScoreAnchors anchors;
  anchors.env_id = std::string(env_id);
  anchors.seed = seed;
  anchors.expert_reward =
      RolloutPolicy(*env, {PolicyKind::kScriptedExpert, seed}, seed, steps)
          .cumulative_reward;
  std::vector<double> random = MapIndices(
      [&](int i) {
        return RolloutPolicy(*env,
                             {PolicyKind::kRandom, static_cast<uint64_t>(i)},
                             seed, steps)
            .cumulative_reward;
      },
      kRandomAnchorEpisodes, execution);
  anchors.random_reward = SumRewards(random) / kRandomAnchorEpisodes;
  anchors.Validate();

  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, anchors);
  return anchors;
}

Demonstration ExpertDemonstration(std::string_view env_id, uint64_t seed) {
  auto env = MakeEnvironment(env_id);
  RolloutRecord record =
      RolloutPolicy(*env, {PolicyKind::kScriptedExpert, seed}, seed,
                    env->spec().max_steps);
  return RecordDemonstration(record, env_id, env->spec().dt);
}

ExperimentConfig ExperimentConfig::Defaults(std::string_view env_id) {
  MakeEnvironment(env_id);  // rejects unknown ids
  ExperimentConfig config;
  config.env_id = std::string(env_id);
  if (env_id == "dint1") {
    config.scheme = GainScheme::kGlobal;
    config.terms = GainTerms::kP;
    config.method = Method::kBo;
    config.budget = 40;
  }
  return config;
}

void ExperimentConfig::Validate() const {
  MakeEnvironment(env_id);
  if (budget <= 0) throw Error("budget must be positive");
  if (pretrain_budget < 0) throw Error("pretrain_budget must be >= 0");
}

std::string ExperimentConfig::ToText() const {
  std::ostringstream out;
  out << "env=" << env_id << "\n"
      << "scheme=" << SchemeName(scheme) << "\n"
      << "terms=" << TermsName(terms) << "\n"
      << "method=" << MethodName(method) << "\n"
      << "budget=" << budget << "\n"
      << "seed=" << seed << "\n"
      << "init=" << InitModeName(init) << "\n"
      << "pretrain_budget=" << pretrain_budget << "\n";
  if (!demo_path.empty()) out << "demo=" << demo_path << "\n";
  return out.str();
}

ExperimentConfig ExperimentConfig::FromText(std::string_view text,
                                            const fs::path& base_dir) {
  ExperimentConfig config;
  bool have_env = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line_number) +
                  ": expected key=value");
    }
    const std::string key = Trim(trimmed.substr(0, eq));
    const std::string value = Trim(trimmed.substr(eq + 1));
    try {
      if (key == "env") {
        config.env_id = value;
        have_env = true;
      } else if (key == "scheme") {
        config.scheme = ParseScheme(value);
      } else if (key == "terms") {
        config.terms = ParseTerms(value);
      } else if (key == "method") {
        config.method = ParseMethod(value);
      } else if (key == "budget") {
        config.budget = static_cast<int>(ParseInt(value));
      } else if (key == "seed") {
        config.seed = static_cast<uint64_t>(ParseInt(value));
      } else if (key == "init") {
        config.init = ParseInitMode(value);
      } else if (key == "pretrain_budget") {
        config.pretrain_budget = static_cast<int>(ParseInt(value));
      } else if (key == "demo") {
        fs::path path(value);
        if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
        config.demo_path = path.string();
      } else if (key == "out") {
        config.out_dir = value;
      } else {
        throw Error("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw Error("config line " + std::to_string(line_number) + ": " +
                  e.what());
    }
  }
  if (!have_env) throw Error("config: missing 'env'");
  return config;
}

TrainOutcome RunTrain(const ExperimentConfig& config, Execution execution) {
  config.Validate();
  auto env = MakeEnvironment(config.env_id);
  const EnvSpec& spec = env->spec();

  TrainOutcome outcome;
  outcome.config = config;
  if (config.demo_path.empty()) {
    outcome.demo = ExpertDemonstration(config.env_id, config.seed);
  } else {
    outcome.demo = DecodeDemonstration(ReadTextFile(config.demo_path));
    if (outcome.demo.env_id != config.env_id) {
      throw Error("demonstration is for '" + outcome.demo.env_id +
                  "', config is for '" + config.env_id + "'");
    }
  }
  outcome.anchors = ComputeAnchors(config.env_id, config.seed, execution);

  if (config.init == InitMode::kPretrained) {
    PretrainProblem problem =
        MakePretrainProblem(*env, config.scheme, config.terms, config.seed);
    outcome.initial_gains =
        PretrainGains(problem, config.seed, config.pretrain_budget, execution)
            .gains;
  } else {
    outcome.initial_gains =
        InitGains(config.scheme, config.terms, spec.joint_count,
                  InitMode::kRandom, nullptr, config.seed);
  }

  RidmConfig ridm;
  ridm.env_id = config.env_id;
  ridm.demo = outcome.demo;
  ridm.gains_init = outcome.initial_gains;
  ridm.method = config.method;
  ridm.budget = config.budget;
  ridm.optimizer_seed = config.seed;
  ridm.eval_seed = config.seed;
  ridm.execution = execution;
  outcome.run = ReinforceGains(ridm);
  outcome.scaled_score = ScaledScore(
      outcome.run.best_rollout.cumulative_reward, outcome.anchors);

  if (!config.out_dir.empty()) WriteArtifacts(outcome, config.out_dir);
  return outcome;
}

std::vector<CompareRow> RunCompare(const ExperimentConfig& config,
                                   Execution execution) {
  ExperimentConfig train = config;
  train.out_dir.clear();
  TrainOutcome outcome = RunTrain(train, execution);
  const ScoreAnchors& anchors = outcome.anchors;

  const GainParams defaults = GainParams::Uniform(
      config.scheme, config.terms, outcome.demo.JointCount(), 0.0);
  const double default_reward =
      TrackDemonstration(config.env_id, outcome.demo, defaults, config.seed)
          .cumulative_reward;
  const double ridm_reward = outcome.run.best_rollout.cumulative_reward;
  return {
      {"expert", anchors.expert_reward,
       ScaledScore(anchors.expert_reward, anchors)},
      {"ridm", ridm_reward, ScaledScore(ridm_reward, anchors)},
      {"default_pid", default_reward, ScaledScore(default_reward, anchors)},
  };
}

std::string CompareToCsv(const std::vector<CompareRow>& rows) {
  std::string out = "agent,reward,scaled_score\n";
  for (const CompareRow& row : rows) {
    out += row.agent + "," + FormatDouble(row.reward) + "," +
           FormatDouble(row.scaled_score) + "\n";
  }
  return out;
}

int CmdDemo(std::string_view env_id, const fs::path& out_path, uint64_t seed,
            std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    Demonstration demo = ExpertDemonstration(env_id, seed);
    WriteTextFile(out_path, EncodeDemonstration(demo));
    const double reward = ComputeAnchors(env_id, seed).expert_reward;
    out << "env=" << env_id << " seed=" << seed
        << " states=" << demo.Length()
        << " expert_reward=" << FormatDouble(reward) << "\n";
    return 0;
  });
}

int CmdAnchors(std::string_view env_id, uint64_t seed, const fs::path& out_csv,
               std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    ScoreAnchors anchors = ComputeAnchors(env_id, seed);
    out << "env=" << anchors.env_id << " seed=" << anchors.seed
        << " expert_reward=" << FormatDouble(anchors.expert_reward)
        << " random_reward=" << FormatDouble(anchors.random_reward) << "\n";
    if (!out_csv.empty()) {
      WriteTextFile(out_csv, "env,seed,expert_reward,random_reward\n" +
                                 anchors.env_id + "," +
                                 std::to_string(anchors.seed) + "," +
                                 FormatDouble(anchors.expert_reward) + "," +
                                 FormatDouble(anchors.random_reward) + "\n");
    }
    return 0;
  });
}

int CmdPretrain(std::string_view env_id, GainScheme scheme, GainTerms terms,
                int budget, uint64_t seed, const fs::path& out_path,
                std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    auto env = MakeEnvironment(env_id);
    PretrainProblem problem = MakePretrainProblem(*env, scheme, terms, seed);
    PretrainResult result = PretrainGains(problem, seed, budget);
    if (!out_path.empty()) WriteTextFile(out_path, EncodeGains(result.gains));
    out << "initial_loss=" << FormatDouble(result.initial_loss)
        << " loss=" << FormatDouble(result.loss) << "\n"
        << EncodeGains(result.gains);
    return 0;
  });
}

int CmdTrain(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    TrainOutcome outcome = RunTrain(config);
    out << "env=" << config.env_id
        << " evaluations=" << outcome.run.optimizer.evaluations()
        << " reward=" << FormatDouble(outcome.run.best_rollout.cumulative_reward)
        << " expert_reward=" << FormatDouble(outcome.anchors.expert_reward)
        << " random_reward=" << FormatDouble(outcome.anchors.random_reward)
        << "\n"
        << "scaled_score=" << FormatDouble(outcome.scaled_score) << "\n";
    return 0;
  });
}

int CmdCompare(const ExperimentConfig& config, const fs::path& out_csv,
               std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::string csv = CompareToCsv(RunCompare(config));
    if (!out_csv.empty()) WriteTextFile(out_csv, csv);
    out << csv;
    return 0;
  });
}

int CmdEval(std::string_view env_id, const fs::path& demo_path,
            const fs::path& gains_path, uint64_t seed,
            const fs::path& rollout_csv, std::ostream& out,
            std::ostream& err) {
  return Guarded(err, [&] {
    Demonstration demo = DecodeDemonstration(ReadTextFile(demo_path));
    GainParams gains = DecodeGains(ReadTextFile(gains_path));
    RolloutRecord record = TrackDemonstration(env_id, demo, gains, seed);
    if (!rollout_csv.empty()) WriteTextFile(rollout_csv, RolloutToCsv(record));
    const ScoreAnchors anchors = ComputeAnchors(env_id, seed);
    out << "reward=" << FormatDouble(record.cumulative_reward)
        << " scaled_score="
        << FormatDouble(ScaledScore(record.cumulative_reward, anchors))
        << "\n";
    return 0;
  });
}

}  // namespace ridm

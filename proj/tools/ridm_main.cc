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

// ridm: demonstrations, anchors, pre-training, training, comparison and
// replay of PID inverse dynamics models.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ridm/envs.h"
#include "ridm/harness.h"
#include "ridm/text_io.h"

namespace {

struct Flags {
  std::string env;
  std::string demo;
  std::string scheme;
  std::string terms;
  std::string method;
  std::string init;
  std::string config;
  std::string out;
  std::string gains;
  std::optional<int> budget;
  std::optional<int> pretrain_budget;
  uint64_t seed = 0;
};

std::string KnownEnvList() {
  std::string list;
  for (const std::string& id : ridm::KnownEnvironments()) {
    list += list.empty() ? id : ", " + id;
  }
  return list;
}

// config file (if any), then environment defaults, then explicit flags
ridm::ExperimentConfig BuildConfig(const Flags& flags, bool seed_given) {
  ridm::ExperimentConfig config;
  if (!flags.config.empty()) {
    const std::filesystem::path path(flags.config);
    config = ridm::ExperimentConfig::FromText(ridm::ReadTextFile(path),
                                              path.parent_path());
    if (!flags.env.empty() && flags.env != config.env_id) {
      throw ridm::Error("--env disagrees with the config file");
    }
  } else {
    if (flags.env.empty()) throw ridm::Error("--env is required");
    config = ridm::ExperimentConfig::Defaults(flags.env);
  }
  if (!flags.demo.empty()) config.demo_path = flags.demo;
  if (!flags.scheme.empty()) config.scheme = ridm::ParseScheme(flags.scheme);
  if (!flags.terms.empty()) config.terms = ridm::ParseTerms(flags.terms);
  if (!flags.method.empty()) config.method = ridm::ParseMethod(flags.method);
  if (!flags.init.empty()) config.init = ridm::ParseInitMode(flags.init);
  if (flags.budget) config.budget = *flags.budget;
  if (flags.pretrain_budget) config.pretrain_budget = *flags.pretrain_budget;
  if (seed_given) config.seed = flags.seed;
  if (!flags.out.empty()) config.out_dir = flags.out;
  return config;
}

void AddExperimentFlags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--env", flags.env, "environment id");
  cmd->add_option("--demo", flags.demo, "demonstration file");
  cmd->add_option("--scheme", flags.scheme, "gain scheme: local or global");
  cmd->add_option("--terms", flags.terms, "gain terms: p, pd or pid");
  cmd->add_option("--method", flags.method, "optimizer: cmaes or bo");
  cmd->add_option("--budget", flags.budget, "objective evaluations");
  cmd->add_option("--pretrain-budget", flags.pretrain_budget,
                  "pre-training evaluations");
  cmd->add_option("--init", flags.init, "initialization: random or pretrained");
  cmd->add_option("--config", flags.config, "key=value experiment file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reinforced inverse dynamics modeling with PID set-point "
               "tracking. Environments: " + KnownEnvList()};
  app.require_subcommand(1);

  Flags flags;
  std::string positional_env;
  std::string positional_out;

  CLI::App* demo = app.add_subcommand("demo", "record a scripted-expert demo");
  demo->add_option("env_id", positional_env, "environment id");
  demo->add_option("path", positional_out, "output demonstration file");
  demo->add_option("--env", flags.env, "environment id");
  demo->add_option("--out", flags.out, "output demonstration file");
  demo->add_option("--seed", flags.seed, "environment seed");

  CLI::App* anchors =
      app.add_subcommand("anchors", "expert and random reward anchors");
  anchors->add_option("env_id", positional_env, "environment id");
  anchors->add_option("--env", flags.env, "environment id");
  anchors->add_option("--seed", flags.seed, "environment seed");
  anchors->add_option("--out", flags.out, "optional CSV output");

  CLI::App* pretrain =
      app.add_subcommand("pretrain", "fit gains to scripted-expert data");
  pretrain->add_option("--env", flags.env, "environment id")->required();
  pretrain->add_option("--scheme", flags.scheme, "local or global");
  pretrain->add_option("--terms", flags.terms, "p, pd or pid");
  pretrain->add_option("--budget", flags.budget, "objective evaluations");
  pretrain->add_option("--seed", flags.seed, "seed");
  pretrain->add_option("--out", flags.out, "output gains file");

  CLI::App* train = app.add_subcommand("train", "run RIDM end to end");
  AddExperimentFlags(train, flags);
  train->add_option("--seed", flags.seed, "seed for every stage");
  train->add_option("--out", flags.out, "artifact directory");

  CLI::App* compare =
      app.add_subcommand("compare", "expert vs RIDM vs default-gains PID");
  AddExperimentFlags(compare, flags);
  compare->add_option("--seed", flags.seed, "seed for every stage");
  compare->add_option("--out", flags.out, "output CSV");

  CLI::App* eval = app.add_subcommand("eval", "replay saved gains on a demo");
  eval->add_option("--env", flags.env, "environment id")->required();
  eval->add_option("--demo", flags.demo, "demonstration file")->required();
  eval->add_option("--gains", flags.gains, "gains file")->required();
  eval->add_option("--seed", flags.seed, "environment seed");
  eval->add_option("--out", flags.out, "optional rollout CSV");

  CLI11_PARSE(app, argc, argv);

  if (!positional_env.empty()) flags.env = positional_env;

  try {
    if (demo->parsed()) {
      const std::string path = !positional_out.empty() ? positional_out
                                                       : flags.out;
      if (flags.env.empty() || path.empty()) {
        throw ridm::Error("usage: ridm demo <env> <path> [--seed N]");
      }
      return ridm::CmdDemo(flags.env, path, flags.seed, std::cout, std::cerr);
    }
    if (anchors->parsed()) {
      if (flags.env.empty()) throw ridm::Error("--env is required");
      return ridm::CmdAnchors(flags.env, flags.seed, flags.out, std::cout,
                              std::cerr);
    }
    if (pretrain->parsed()) {
      ridm::ExperimentConfig defaults = ridm::ExperimentConfig::Defaults(
          flags.env);
      const auto scheme = flags.scheme.empty()
                              ? defaults.scheme
                              : ridm::ParseScheme(flags.scheme);
      const auto terms = flags.terms.empty() ? defaults.terms
                                             : ridm::ParseTerms(flags.terms);
      return ridm::CmdPretrain(flags.env, scheme, terms,
                               flags.budget.value_or(defaults.pretrain_budget),
                               flags.seed, flags.out, std::cout, std::cerr);
    }
    if (train->parsed()) {
      const bool seed_given = train->count("--seed") > 0;
      return ridm::CmdTrain(BuildConfig(flags, seed_given), std::cout,
                            std::cerr);
    }
    if (compare->parsed()) {
      const bool seed_given = compare->count("--seed") > 0;
      ridm::ExperimentConfig config = BuildConfig(flags, seed_given);
      config.out_dir.clear();
      return ridm::CmdCompare(config, flags.out, std::cout, std::cerr);
    }
    if (eval->parsed()) {
      return ridm::CmdEval(flags.env, flags.demo, flags.gains, flags.seed,
                           flags.out, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

// Copyright 2026 The Bribelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bribelab: solve, verify, compare, simulate and sweep the collusion game.
//
// Exit status: 0 all audits pass, 1 an audit found a witness, 2 the
// configuration or run failed.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bribe/cli.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> out;
  std::optional<unsigned long long> seed;
  std::optional<unsigned> threads;
  std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "YAML configuration file");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--threads", f.threads, "worker cap (0 = all cores)");
  cmd->add_option("--set", f.sets, "override a config key (dotted.key=value)")
      ->take_all();
}

}  // namespace

int main(int argc, char** argv) {
  namespace bc = bribe::cli;
  CLI::App app{"Bribe-and-request collusion laboratory"};
  app.require_subcommand(1);
  Flags flags;
  const char* names[] = {"solve", "verify", "compare", "simulate", "sweep"};
  const char* help[] = {
      "solve the equilibrium bribing schedule",
      "run the IC, D1 and dominance audits",
      "compare against the bribe-only benchmark",
      "Monte Carlo play of the game",
      "simulate over a grid of one configuration key",
  };
  std::vector<CLI::App*> cmds;
  for (int i = 0; i < 5; ++i) {
    cmds.push_back(app.add_subcommand(names[i], help[i]));
    add_common(cmds.back(), flags);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : bc::kError;
  }

  try {
    std::vector<std::string> sets;
    if (flags.out) sets.push_back("out=" + *flags.out);
    if (flags.seed) sets.push_back("seed=" + std::to_string(*flags.seed));
    if (flags.threads) sets.push_back("threads=" + std::to_string(*flags.threads));
    sets.insert(sets.begin(), flags.sets.begin(), flags.sets.end());
    const auto cfg = bc::load_config(flags.config, sets);

    bc::RunReport rep;
    if (cmds[0]->parsed()) rep = bc::cmd_solve(cfg);
    else if (cmds[1]->parsed()) rep = bc::cmd_verify(cfg);
    else if (cmds[2]->parsed()) rep = bc::cmd_compare(cfg);
    else if (cmds[3]->parsed()) rep = bc::cmd_simulate(cfg);
    else rep = bc::cmd_sweep(cfg);
    return rep.exit_code;
  } catch (const bc::ConfigError& e) {
    std::fprintf(stderr, "bribelab: configuration error: %s\n", e.what());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "bribelab: error: %s\n", e.what());
  }
  return bc::kError;
}

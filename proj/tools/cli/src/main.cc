// Copyright 2026 The driftbench Authors
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

// driftbench command line: stream generation, burst injection, sampler
// ranking, hyperparameter search and output verification.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "driftbench/cli/commands.h"
#include "driftbench/cli/config.h"
#include "driftbench/core/types.h"

namespace {

struct CommonFlags {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> preset;
  std::string out = ".";
};

void AddCommon(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "JSON run config");
  cmd->add_option("--seed", flags.seed, "Master seed override");
  cmd->add_option("--out", flags.out, "Directory holding inputs and outputs");
  cmd->add_option("--preset", flags.preset, "Built-in config to start from")
      ->check(CLI::IsMember({"paper-sec6"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"driftbench: benchmark frequent-item samplers on drifting streams"};
  app.require_subcommand(1);

  CommonFlags flags;
  using Runner = void (*)(const nlohmann::json&, const std::filesystem::path&, std::ostream&);
  struct Entry {
    const char* name;
    const char* help;
    Runner run;
  };
  const Entry entries[] = {
      {"generate", "Generate streams and their metadata", driftbench::cli::CmdGenerate},
      {"burst", "Inject micro-bursts into generated streams", driftbench::cli::CmdBurst},
      {"rank-distance", "Rank samplers by Hellinger distance to the oracle",
       driftbench::cli::CmdRankDistance},
      {"rank-imbalance", "Rank samplers by partition load imbalance",
       driftbench::cli::CmdRankImbalance},
      {"optimize", "Search sampler hyperparameters", driftbench::cli::CmdOptimize},
  };
  Runner chosen = nullptr;
  for (const auto& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    AddCommon(cmd, flags);
    cmd->callback([&chosen, run = e.run] { chosen = run; });
  }

  std::string verify_out = ".";
  std::vector<std::string> compare;
  bool verify = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Re-derive digests and fingerprints of outputs");
  verify_cmd->add_option("--out", verify_out, "Directory to verify");
  verify_cmd->add_option("--compare", compare, "Check that two run JSON files are comparable")
      ->expected(2);
  verify_cmd->callback([&verify] { verify = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (verify) {
      if (!compare.empty()) {
        driftbench::cli::CmdCompare(compare[0], compare[1], std::cout);
        return 0;
      }
      return driftbench::cli::CmdVerify(verify_out, std::cout).empty() ? 0 : 1;
    }
    const auto config = driftbench::cli::LoadRunConfig(flags.config, flags.preset, flags.seed);
    chosen(config, flags.out, std::cout);
    return 0;
  } catch (const driftbench::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const driftbench::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  }
}

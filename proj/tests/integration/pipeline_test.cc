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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "driftbench/cli/json_io.h"
#include "driftbench/cli/output.h"
#include "driftbench/cli/stream_file.h"

namespace driftbench::cli {
namespace {

namespace fs = std::filesystem;

fs::path Root() {
  static const fs::path root = [] {
    const fs::path p = fs::path(::testing::TempDir()) / "driftbench_pipeline_test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

int RunCli(const std::string& args) {
  const std::string cmd = std::string(DRIFTBENCH_EXE) + " " + args + " > " +
                          (Root() / "last.log").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json SmallConfig() {
  const json lossy{{"type", "lossy_counting"}, {"params", {{"epsilon", 0.002}}}};
  return {
      {"seed", 5},
      {"run", "small"},
      {"streams",
       json::array({{{"name", "s1"},
                     {"n", 60000},
                     {"num_keys", 2000},
                     {"distributions",
                      json::array({{{"id", "a"}, {"zipf", {{"exponent", 1.0}}}},
                                   {{"id", "b"}, {"zipf", {{"exponent", 1.0}, {"permute", true}}}}})},
                     {"drifts", json::array({{{"at", 1}, {"from", "a"}, {"to", "a"}},
                                             {{"start", 20000}, {"end", 40000},
                                              {"from", "a"}, {"to", "b"}}})}},
                    {{"name", "s2"},
                     {"n", 60000},
                     {"num_keys", 2000},
                     {"distributions", json::array({{{"id", "a"}, {"zipf", {{"exponent", 1.5}}}}})},
                     {"drifts", json::array({{{"at", 1}, {"from", "a"}, {"to", "a"}}})}}})},
      {"bursts", json::array({{{"input", "s1"}, {"output", "s1_burst"}, {"bsp", 0.3},
                               {"kbp", 0.3}, {"bl_min", 1}, {"bl_max", 2}}})},
      {"input", "s1"},
      {"batch_size", 5000},
      {"top_k", 50},
      {"samplers",
       json::array({{{"name", "Oracle"}, {"type", "oracle"}},
                    {{"name", "Lossy"}, {"type", "lossy_counting"}, {"params", {{"epsilon", 0.002}}}},
                    {{"name", "TMP"}, {"type", "temporal_smoothed"},
                     {"params", {{"threshold", 5000}, {"switch_threshold", 5000}}},
                     {"inner", lossy}}})},
      {"imbalance", {{"partitions", 3}, {"decider", "always"}, {"repartitioner", "greedy_lpt"}}},
      {"optimize",
       {{"inputs", json::array({"s1", "s2"})},
        {"sampler", {{"type", "lossy_counting"}, {"params", {{"epsilon", 0.01}}}}},
        {"params", json::array({{{"name", "epsilon"}, {"kind", "real"}, {"min", 0.001},
                                 {"max", 0.1}, {"step", 2}, {"scale", "log"}}})},
        {"initial", json::array({{{"epsilon", 0.05}}})},
        {"generations", 3}}},
  };
}

fs::path WriteConfig(const std::string& name, const json& config) {
  const fs::path path = Root() / name;
  WriteJsonFile(path, config);
  return path;
}

std::string Pipeline(const fs::path& config, const fs::path& out) {
  const std::string flags = " --config " + config.string() + " --out " + out.string();
  for (const char* cmd : {"generate", "burst", "rank-distance", "rank-imbalance", "optimize"}) {
    const int code = RunCli(std::string(cmd) + flags);
    if (code != 0) return std::string(cmd) + " exited " + std::to_string(code) + ": " +
                          ReadTextFile(Root() / "last.log");
  }
  return "";
}

TEST(PipelineTest, FullRunIsDeterministicAndVerifies) {
  const auto config = WriteConfig("small.json", SmallConfig());
  const fs::path a = Root() / "run_a";
  const fs::path b = Root() / "run_b";
  ASSERT_EQ(Pipeline(config, a), "");
  ASSERT_EQ(Pipeline(config, b), "");

  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto name = entry.path().filename();
    ASSERT_TRUE(fs::exists(b / name)) << name;
    EXPECT_EQ(ReadTextFile(entry.path()), ReadTextFile(b / name)) << name;
    ++compared;
  }
  EXPECT_GE(compared, 12u);
  for (const char* f : {"s1.dbs", "s1_burst.bursts.csv", "small.distance.csv",
                        "small.imbalance.csv", "small.optimize.csv", "small.optimize.json"}) {
    EXPECT_TRUE(fs::exists(a / f)) << f;
  }
  EXPECT_EQ(ReadStreamFile(a / "s1.dbs").size(), 60000u);
  EXPECT_EQ(RunCli("verify --out " + a.string()), 0) << ReadTextFile(Root() / "last.log");
}

TEST(PipelineTest, SeedOverrideChangesStreams) {
  const auto config = WriteConfig("seeded.json", SmallConfig());
  const fs::path a = Root() / "seed_a";
  const fs::path b = Root() / "seed_b";
  ASSERT_EQ(RunCli("generate --config " + config.string() + " --out " + a.string()), 0);
  ASSERT_EQ(RunCli("generate --config " + config.string() + " --seed 6 --out " + b.string()), 0);
  EXPECT_NE(ReadTextFile(a / "s1.dbs"), ReadTextFile(b / "s1.dbs"));
}

TEST(PipelineTest, VerifyDetectsTampering) {
  const auto config = WriteConfig("tamper.json", SmallConfig());
  const fs::path out = Root() / "tamper";
  ASSERT_EQ(RunCli("generate --config " + config.string() + " --out " + out.string()), 0);
  auto keys = ReadStreamFile(out / "s2.dbs");
  keys[10] += 1;
  WriteStreamFile(out / "s2.dbs", keys);
  EXPECT_EQ(RunCli("verify --out " + out.string()), 1);
}

TEST(PipelineTest, ComparisonRefusedWhenPartitionsDiffer) {
  auto cfg = SmallConfig();
  const fs::path out = Root() / "compare";
  const auto path = WriteConfig("compare.json", cfg);
  ASSERT_EQ(RunCli("generate --config " + path.string() + " --out " + out.string()), 0);
  ASSERT_EQ(RunCli("rank-imbalance --config " + path.string() + " --out " + out.string()), 0);
  cfg["run"] = "other";
  cfg["imbalance"]["partitions"] = 4;
  const auto other = WriteConfig("compare_other.json", cfg);
  ASSERT_EQ(RunCli("rank-imbalance --config " + other.string() + " --out " + out.string()), 0);
  const std::string a = (out / "small.imbalance.json").string();
  const std::string b = (out / "other.imbalance.json").string();
  EXPECT_EQ(RunCli("verify --compare " + a + " " + a), 0);
  EXPECT_EQ(RunCli("verify --compare " + a + " " + b), 1);
  EXPECT_NE(ReadTextFile(Root() / "last.log").find("partitions"), std::string::npos);
}

TEST(PipelineTest, ExitCodes) {
  auto cfg = SmallConfig();
  cfg["streams"][0]["n"] = 0;
  const auto invalid = WriteConfig("invalid.json", cfg);
  EXPECT_EQ(RunCli("generate --config " + invalid.string() + " --out " + (Root() / "x").string()), 1);

  auto broken = SmallConfig();
  broken["streams"][0]["drifts"][1]["from"] = "b";  // breaks continuity
  const auto discontinuous = WriteConfig("discontinuous.json", broken);
  EXPECT_EQ(RunCli("generate --config " + discontinuous.string() + " --out " +
                (Root() / "x").string()),
            1);
  EXPECT_NE(ReadTextFile(Root() / "last.log").find("continuity"), std::string::npos);

  const auto good = WriteConfig("good.json", SmallConfig());
  EXPECT_EQ(RunCli("rank-distance --config " + good.string() + " --out " +
                (Root() / "empty").string()),
            2);
  EXPECT_EQ(RunCli("generate --config " + (Root() / "nope.json").string()), 2);
  EXPECT_EQ(RunCli("generate --preset nonsense"), 1);
  EXPECT_EQ(RunCli("frobnicate"), 1);
  EXPECT_EQ(RunCli("--help"), 0);
}

}  // namespace
}  // namespace driftbench::cli

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

#include "driftbench/cli/config.h"

namespace driftbench::cli {
namespace {

json ZipfStream(const std::string& name, double exponent) {
  return {
      {"name", name},
      {"n", 5000000},
      {"num_keys", 100000},
      {"distributions",
       json::array({{{"id", "p1"}, {"zipf", {{"exponent", exponent}}}},
                    {{"id", "p2"}, {"zipf", {{"exponent", exponent}, {"permute", true}}}}})},
      // Initial concept from index 1, then a gradual drift of 1M elements
      // centred on the middle of the stream.
      {"drifts", json::array({{{"at", 1}, {"from", "p1"}, {"to", "p1"}},
                              {{"start", 2000000}, {"end", 3000000}, {"from", "p1"},
                               {"to", "p2"}}})},
  };
}

json Lossy() { return {{"type", "lossy_counting"}, {"params", {{"epsilon", 1e-4}}}}; }

json ReferencePreset() {
  return {
      {"seed", 2021},
      {"run", "reference"},
      {"streams", json::array({ZipfStream("zipf1", 1.0), ZipfStream("zipf2", 2.0)})},
      {"bursts",
       json::array({{{"input", "zipf1"}, {"output", "zipf1_light"}, {"bsp", 0.05},
                     {"kbp", 0.1}, {"bl_min", 1}, {"bl_max", 2}},
                    {{"input", "zipf1"}, {"output", "zipf1_heavy"}, {"bsp", 0.2},
                     {"kbp", 0.5}, {"bl_min", 1}, {"bl_max", 3}}})},
      {"input", "zipf1"},
      {"batch_size", 30000},
      {"top_k", 300},
      {"samplers",
       json::array({
           {{"name", "Oracle"}, {"type", "oracle"}},
           {{"name", "LossyCounting"}, {"type", "lossy_counting"},
            {"params", {{"epsilon", 1e-4}}}},
           {{"name", "Frequent"}, {"type", "frequent"},
            {"params", {{"basic_window", 10000}, {"windows", 10}, {"k", 1000}}}},
           {{"name", "TMP"}, {"type", "temporal_smoothed"},
            {"params", {{"threshold", 40000}, {"switch_threshold", 40000}}},
            {"inner", Lossy()}},
           {{"name", "CPS"}, {"type", "checkpoint_smoothed"},
            {"params",
             {{"checkpoint_window", 40000}, {"check_threshold", 40000},
              {"error_threshold", 0.2}}},
            {"inner", Lossy()}},
       })},
      {"imbalance",
       {{"partitions", 5}, {"decider", "imbalance_threshold:10"},
        {"repartitioner", "greedy_lpt"}}},
      {"optimize",
       {{"inputs", json::array({"zipf1", "zipf2"})},
        {"sampler",
         {{"type", "temporal_smoothed"},
          {"params", {{"threshold", 40000}, {"switch_threshold", 40000}}},
          {"inner", Lossy()}}},
        {"params",
         json::array({{{"name", "threshold"}, {"kind", "integer"}, {"min", 10000},
                       {"max", 200000}, {"step", 10000}, {"window", true}},
                      {{"name", "switch_threshold"}, {"kind", "integer"}, {"min", 10000},
                       {"max", 200000}, {"step", 10000}, {"window", true}}})},
        {"initial", json::array({{{"threshold", 40000}, {"switch_threshold", 40000}}})},
        {"generations", 5},
        {"survivors", 2},
        {"children_per_survivor", 4},
        {"weights", {{"hellinger", 1.0}, {"counters", 0.0}, {"time_ms", 0.0}}},
        {"anti_overfitting", true}}},
  };
}

}  // namespace

json Preset(const std::string& name) {
  if (name == "paper-sec6") return ReferencePreset();
  throw ValidationError("unknown preset '" + name + "'");
}

}  // namespace driftbench::cli

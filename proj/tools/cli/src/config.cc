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

#include <map>

#include "driftbench/cli/json_io.h"
#include "driftbench/generator/rng.h"

namespace driftbench::cli {

std::uint64_t SeedOf(const json& config) {
  if (!config.contains("seed")) return 0;
  try {
    return config.at("seed").get<std::uint64_t>();
  } catch (const json::exception&) {
    throw ValidationError("seed must be a non-negative integer");
  }
}

json LoadRunConfig(const std::optional<std::string>& config_path,
                   const std::optional<std::string>& preset,
                   const std::optional<std::uint64_t>& seed) {
  json config = preset ? Preset(*preset) : json::object();
  if (config_path) {
    const json patch = ReadJsonFile(*config_path);
    if (!patch.is_object()) throw ValidationError("config must be a JSON object");
    config.merge_patch(patch);
  }
  if (seed) config["seed"] = *seed;
  if (!config.contains("seed")) config["seed"] = 0;
  SeedOf(config);
  return config;
}

namespace {

std::uint64_t U64(const json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("stream lacks '") + key + "'");
  const json& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  if (v.is_number_float() && v.get<double>() >= 0 &&
      v.get<double>() == static_cast<double>(static_cast<std::uint64_t>(v.get<double>()))) {
    return static_cast<std::uint64_t>(v.get<double>());
  }
  throw ValidationError(std::string("'") + key + "' must be a non-negative integer");
}

}  // namespace

StreamMetadata StreamFromConfig(const json& stream, std::uint64_t master_seed) {
  if (!stream.is_object()) throw ValidationError("stream entries must be objects");
  if (!stream.contains("name") || !stream.at("name").is_string()) {
    throw ValidationError("stream lacks a name");
  }
  const std::string name = stream.at("name").get<std::string>();
  StreamMetadata md;
  md.n = U64(stream, "n");
  md.num_keys = U64(stream, "num_keys");
  if (md.n == 0) throw ValidationError("stream '" + name + "': n must be >= 1");
  md.seed = DeriveSeed(master_seed, "stream:" + name);

  if (!stream.contains("distributions") || !stream.at("distributions").is_array()) {
    throw ValidationError("stream '" + name + "' lacks distributions");
  }
  json dists = json::array();
  for (json d : stream.at("distributions")) {
    if (d.contains("zipf") && d.at("zipf").contains("permute")) {
      const bool permute = d.at("zipf").at("permute").get<bool>();
      d["zipf"].erase("permute");
      if (permute && !d.at("zipf").contains("perm_seed")) {
        d["zipf"]["perm_seed"] =
            DeriveSeed(master_seed, "perm:" + name + ":" + d.value("id", std::string()));
      }
    }
    dists.push_back(d);
  }

  if (!stream.contains("drifts") || !stream.at("drifts").is_array()) {
    throw ValidationError("stream '" + name + "' lacks drifts");
  }
  json drifts = json::array();
  for (const auto& d : stream.at("drifts")) {
    std::uint64_t length = 0;
    std::uint64_t doubled_mid = 0;
    if (d.contains("at")) {
      doubled_mid = 2 * U64(d, "at");
    } else {
      const std::uint64_t start = U64(d, "start");
      const std::uint64_t end = U64(d, "end");
      if (end <= start) throw ValidationError("gradual drift needs end > start");
      length = end - start;
      doubled_mid = start + end;
    }
    if (!d.contains("from") || !d.contains("to")) {
      throw ValidationError("drift lacks 'from' or 'to'");
    }
    drifts.push_back({{"length", length},
                      {"doubled_mid", doubled_mid},
                      {"from", d.at("from")},
                      {"to", d.at("to")}});
  }
  const json full{{"n", md.n},
                  {"num_keys", md.num_keys},
                  {"seed", md.seed},
                  {"distributions", dists},
                  {"drifts", drifts}};
  return MetadataFromJson(full);
}

}  // namespace driftbench::cli

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

#include "driftbench/cli/json_io.h"

#include <fstream>
#include <map>

#include "driftbench/cli/output.h"

namespace driftbench::cli {
namespace {

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T GetOr(const json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return Get<T>(j, key);
}

}  // namespace

json MetadataToJson(const StreamMetadata& md) {
  json dists = json::array();
  for (const auto& d : md.distributions) {
    json entry{{"id", d.id}};
    if (const auto* z = std::get_if<ZipfSpec>(&d.source)) {
      json zipf{{"exponent", z->exponent}};
      if (z->perm_seed) zipf["perm_seed"] = *z->perm_seed;
      entry["zipf"] = zipf;
    } else {
      json weights = json::array();
      for (const auto& [key, w] : std::get<ExplicitSpec>(d.source).weights) {
        weights.push_back(json::array({key, w}));
      }
      entry["weights"] = weights;
    }
    dists.push_back(entry);
  }
  json drifts = json::array();
  for (const auto& d : md.drifts) {
    drifts.push_back({{"length", d.length},
                      {"doubled_mid", d.doubled_mid},
                      {"from", md.distributions.at(d.from).id},
                      {"to", md.distributions.at(d.to).id}});
  }
  json bursts = json::array();
  for (const auto& b : md.bursts) {
    json held = json::array();
    for (const auto& [key, count] : b.held_counts) held.push_back(json::array({key, count}));
    bursts.push_back({{"start_batch", b.start_batch},
                      {"length_batches", b.length_batches},
                      {"faulty_keys", b.faulty_keys},
                      {"held_counts", held}});
  }
  return json{{"n", md.n},         {"num_keys", md.num_keys},
              {"seed", md.seed},   {"distributions", dists},
              {"drifts", drifts},  {"bursts", bursts}};
}

StreamMetadata MetadataFromJson(const json& j) {
  StreamMetadata md;
  md.n = Get<std::uint64_t>(j, "n");
  md.num_keys = Get<std::uint64_t>(j, "num_keys");
  md.seed = Get<std::uint64_t>(j, "seed");
  std::map<std::string, std::size_t> index;
  for (const auto& d : Field(j, "distributions")) {
    DistSpec spec;
    spec.id = Get<std::string>(d, "id");
    if (d.contains("zipf")) {
      const json& z = d.at("zipf");
      ZipfSpec zipf;
      zipf.exponent = Get<double>(z, "exponent");
      if (z.contains("perm_seed")) zipf.perm_seed = Get<std::uint64_t>(z, "perm_seed");
      spec.source = zipf;
    } else {
      ExplicitSpec weights;
      for (const auto& w : Field(d, "weights")) {
        if (!w.is_array() || w.size() != 2) {
          throw ValidationError("weights entries must be [key, weight] pairs");
        }
        try {
          weights.weights.emplace_back(w[0].get<Key>(), w[1].get<double>());
        } catch (const json::exception& e) {
          throw ValidationError(std::string("bad weight entry: ") + e.what());
        }
      }
      spec.source = weights;
    }
    if (!index.emplace(spec.id, md.distributions.size()).second) {
      throw ValidationError("duplicate distribution id '" + spec.id + "'");
    }
    md.distributions.push_back(std::move(spec));
  }
  auto lookup = [&index](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw ValidationError("unknown distribution id '" + id + "'");
    return it->second;
  };
  for (const auto& d : Field(j, "drifts")) {
    md.drifts.push_back(DriftSpec{Get<std::uint64_t>(d, "length"),
                                  Get<std::uint64_t>(d, "doubled_mid"),
                                  lookup(Get<std::string>(d, "from")),
                                  lookup(Get<std::string>(d, "to"))});
  }
  if (j.contains("bursts")) {
    for (const auto& b : j.at("bursts")) {
      BurstEvent event;
      event.start_batch = Get<std::uint64_t>(b, "start_batch");
      event.length_batches = Get<std::uint64_t>(b, "length_batches");
      event.faulty_keys = Get<std::vector<Key>>(b, "faulty_keys");
      for (const auto& h : Field(b, "held_counts")) {
        event.held_counts[h.at(0).get<Key>()] = h.at(1).get<std::uint64_t>();
      }
      md.bursts.push_back(std::move(event));
    }
  }
  return md;
}

json SamplerSpecToJson(const SamplerSpec& spec) {
  json j{{"type", spec.type}};
  if (!spec.name.empty()) j["name"] = spec.name;
  if (!spec.params.empty()) j["params"] = spec.params;
  if (spec.inner) j["inner"] = SamplerSpecToJson(*spec.inner);
  return j;
}

SamplerSpec SamplerSpecFromJson(const json& j) {
  SamplerSpec spec;
  spec.type = Get<std::string>(j, "type");
  spec.name = GetOr<std::string>(j, "name", "");
  if (spec.name.find_first_of(",\n\r\"") != std::string::npos) {
    throw ValidationError("sampler name '" + spec.name + "' contains a reserved character");
  }
  if (j.contains("params")) spec.params = Get<std::map<std::string, double>>(j, "params");
  if (j.contains("inner")) {
    spec.inner = std::make_shared<SamplerSpec>(SamplerSpecFromJson(j.at("inner")));
  }
  return spec;
}

BurstConfig BurstConfigFromJson(const json& j) {
  BurstConfig c;
  c.bsp = Get<double>(j, "bsp");
  c.kbp = Get<double>(j, "kbp");
  c.bl_min = Get<std::uint64_t>(j, "bl_min");
  c.bl_max = Get<std::uint64_t>(j, "bl_max");
  c.Validate();
  return c;
}

ParamDef ParamDefFromJson(const json& j) {
  ParamDef p;
  p.name = Get<std::string>(j, "name");
  const std::string kind = GetOr<std::string>(j, "kind", "real");
  if (kind == "integer") {
    p.kind = ParamKind::kInteger;
  } else if (kind != "real") {
    throw ValidationError("parameter kind must be 'integer' or 'real'");
  }
  p.min = Get<double>(j, "min");
  p.max = Get<double>(j, "max");
  p.step = Get<double>(j, "step");
  const std::string scale = GetOr<std::string>(j, "scale", "linear");
  if (scale == "log") {
    p.scale = ParamScale::kLog;
  } else if (scale != "linear") {
    throw ValidationError("parameter scale must be 'linear' or 'log'");
  }
  p.probability = GetOr<bool>(j, "probability", false);
  p.window = GetOr<bool>(j, "window", false);
  return p;
}

Config ConfigFromJson(const json& j) {
  try {
    return j.get<Config>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad parameter config: ") + e.what());
  }
}

json FingerprintToJson(const RunFingerprint& fp) {
  return json{{"stream_id", fp.stream_id},
              {"num_partitions", fp.num_partitions},
              {"decider", fp.decider_spec},
              {"repartitioner", fp.repartitioner_spec},
              {"batch_size", fp.batch_size},
              {"sampler", fp.sampler_spec},
              {"seed", fp.seed},
              {"digest", fp.Digest()}};
}

RunFingerprint FingerprintFromJson(const json& j) {
  RunFingerprint fp;
  fp.stream_id = Get<std::string>(j, "stream_id");
  fp.num_partitions = Get<std::uint64_t>(j, "num_partitions");
  fp.decider_spec = Get<std::string>(j, "decider");
  fp.repartitioner_spec = Get<std::string>(j, "repartitioner");
  fp.batch_size = Get<std::uint64_t>(j, "batch_size");
  fp.sampler_spec = Get<std::string>(j, "sampler");
  fp.seed = Get<std::uint64_t>(j, "seed");
  return fp;
}

void WriteJsonFile(const std::filesystem::path& path, const json& j) {
  WriteTextFile(path, j.dump(2) + "\n");
}

json ReadJsonFile(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace driftbench::cli

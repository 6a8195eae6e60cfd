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

#include "driftbench/cli/commands.h"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "driftbench/adaptive/oracle.h"
#include "driftbench/cli/config.h"
#include "driftbench/cli/json_io.h"
#include "driftbench/cli/output.h"
#include "driftbench/cli/stream_file.h"
#include "driftbench/generator/burst.h"
#include "driftbench/generator/rng.h"
#include "driftbench/generator/stream.h"
#include "driftbench/optimizer/fitness.h"
#include "driftbench/optimizer/optimizer.h"
#include "driftbench/ranking/distance_benchmark.h"
#include "driftbench/ranking/fingerprint.h"
#include "driftbench/ranking/imbalance_benchmark.h"

namespace driftbench::cli {
namespace fs = std::filesystem;
namespace {

constexpr std::uint64_t kDefaultBatch = 30000;
constexpr std::uint64_t kDefaultTopK = 300;

const json& Section(const json& config, const char* key) {
  if (!config.contains(key)) {
    throw ValidationError(std::string("config lacks '") + key + "'");
  }
  return config.at(key);
}

std::uint64_t UintOr(const json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<std::uint64_t>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("'") + key + "' must be a non-negative integer");
  }
}

std::string StringOr(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ValidationError(std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

std::string RunName(const json& config) {
  const std::string run = StringOr(config, "run", "run");
  if (run.empty() || run.find_first_of("/\\") != std::string::npos) {
    throw ValidationError("run name must be a plain file name");
  }
  return run;
}

void PrepareDir(const fs::path& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
}

std::string ConfigDigest(const json& embedded) {
  return HexDigest(Fnv1a64(embedded.dump()));
}

void WriteStream(const fs::path& out, const std::string& name, const StreamBuffer& stream,
                 const json& embedded) {
  WriteStreamFile(out / (name + ".dbs"), stream.keys);
  WriteJsonFile(out / (name + ".meta.json"),
                json{{"config", embedded},
                     {"fingerprint", ConfigDigest(embedded)},
                     {"stream_digest", StreamDigest(stream.keys)},
                     {"metadata", MetadataToJson(stream.metadata)}});
}

struct LoadedStream {
  StreamBuffer stream;
  std::string digest;
};

LoadedStream LoadStream(const fs::path& dir, const std::string& name) {
  const json meta = ReadJsonFile(dir / (name + ".meta.json"));
  LoadedStream loaded;
  loaded.stream.keys = ReadStreamFile(dir / (name + ".dbs"));
  try {
    loaded.stream.metadata = MetadataFromJson(meta.at("metadata"));
    loaded.digest = meta.at("stream_digest").get<std::string>();
  } catch (const json::exception& e) {
    throw ValidationError(name + ".meta.json: " + e.what());
  }
  if (loaded.stream.metadata.n != loaded.stream.keys.size()) {
    throw IoError(name + ".dbs does not match its metadata length");
  }
  return loaded;
}

struct ConfiguredSampler {
  SamplerSpec spec;
  std::string name;
};

std::vector<ConfiguredSampler> SamplersFrom(const json& config) {
  const json& list = Section(config, "samplers");
  if (!list.is_array() || list.empty()) throw ValidationError("'samplers' must be a non-empty array");
  std::vector<ConfiguredSampler> out;
  std::set<std::string> names;
  for (const auto& entry : list) {
    SamplerSpec spec = SamplerSpecFromJson(entry);
    const std::string name = spec.DisplayName();
    if (!names.insert(name).second) throw ValidationError("duplicate sampler name '" + name + "'");
    out.push_back({std::move(spec), name});
  }
  return out;
}

SamplerContext ContextFor(const std::shared_ptr<const Oracle>& oracle, std::uint64_t seed,
                          const std::string& name) {
  return SamplerContext{oracle, DeriveSeed(seed, "sampler:" + name)};
}

std::string JoinSpecs(const std::vector<ConfiguredSampler>& samplers) {
  std::string out;
  for (const auto& s : samplers) {
    if (!out.empty()) out += ";";
    out += s.name + "=" + s.spec.Canonical();
  }
  return out;
}

}  // namespace

void CmdGenerate(const json& config, const fs::path& out, std::ostream& log) {
  const std::uint64_t seed = SeedOf(config);
  const json& streams = Section(config, "streams");
  if (!streams.is_array() || streams.empty()) {
    throw ValidationError("'streams' must be a non-empty array");
  }
  PrepareDir(out);
  for (const auto& entry : streams) {
    const StreamMetadata md = StreamFromConfig(entry, seed);
    const std::string name = entry.at("name").get<std::string>();
    const StreamBuffer stream = GenerateStream(md);
    WriteStream(out, name, stream, json{{"seed", seed}, {"stream", entry}});
    log << name << ": n=" << md.n << " keys=" << md.num_keys
        << " drifts=" << md.drifts.size() << " seed=" << md.seed
        << " digest=" << StreamDigest(stream.keys) << "\n";
  }
}

void CmdBurst(const json& config, const fs::path& out, std::ostream& log) {
  const std::uint64_t seed = SeedOf(config);
  const json& bursts = Section(config, "bursts");
  if (!bursts.is_array() || bursts.empty()) {
    throw ValidationError("'bursts' must be a non-empty array");
  }
  const std::uint64_t batch = UintOr(config, "batch_size", kDefaultBatch);
  PrepareDir(out);
  for (const auto& entry : bursts) {
    const std::string input = StringOr(entry, "input", "");
    const std::string output = StringOr(entry, "output", "");
    if (input.empty() || output.empty()) throw ValidationError("burst entries need input and output");
    if (input == output) throw ValidationError("burst output must differ from its input");
    const BurstConfig burst = BurstConfigFromJson(entry);
    const LoadedStream source = LoadStream(out, input);
    const StreamBuffer result =
        InjectBursts(source.stream, burst, batch, DeriveSeed(seed, "burst:" + output));
    WriteStream(out, output, result,
                json{{"seed", seed}, {"batch_size", batch}, {"burst", entry},
                     {"source_digest", source.digest}});

    std::ostringstream csv;
    csv << "start_batch,length_batches,faulty_keys,held_items\n";
    std::uint64_t held_total = 0;
    for (const auto& b : result.metadata.bursts) {
      std::uint64_t held = 0;
      for (const auto& [key, count] : b.held_counts) held += count;
      held_total += held;
      csv << b.start_batch << ',' << b.length_batches << ',' << b.faulty_keys.size() << ','
          << held << '\n';
    }
    WriteTextFile(out / (output + ".bursts.csv"), csv.str());
    log << output << ": bursts=" << result.metadata.bursts.size() << " held=" << held_total
        << " batch=" << batch << "\n";
  }
}

void CmdRankDistance(const json& config, const fs::path& out, std::ostream& log) {
  const std::uint64_t seed = SeedOf(config);
  const std::string run = RunName(config);
  const std::string input = StringOr(config, "input", "");
  if (input.empty()) throw ValidationError("config lacks 'input' stream");
  const std::uint64_t batch = UintOr(config, "batch_size", kDefaultBatch);
  const std::uint64_t top_k = UintOr(config, "top_k", kDefaultTopK);
  const bool timings = config.value("timings", false);
  const auto samplers = SamplersFrom(config);
  const LoadedStream loaded = LoadStream(out, input);
  auto oracle = std::make_shared<const Oracle>(loaded.stream.metadata);

  std::vector<NamedSampler> named;
  for (const auto& s : samplers) {
    named.push_back({s.name, MakeSamplerFactory(s.spec, ContextFor(oracle, seed, s.name))});
  }
  const auto result = RunDistanceBenchmark(loaded.stream, named, {batch, top_k});

  const RunFingerprint fp{loaded.digest, 0, "none", "none", batch, JoinSpecs(samplers), seed};
  const std::string digest = fp.Digest();
  WriteSeriesCsv(out / (run + ".distance.csv"), digest, result.series);
  if (timings) WriteSeriesCsv(out / (run + ".distance.timings.csv"), digest, result.timings);

  json ranking = json::array();
  log << "fingerprint " << digest << "\n";
  log << "rank  algorithm             mean_hellinger  max_hellinger  mean_counters\n";
  std::size_t rank = 0;
  for (const auto& name : result.ranking) {
    const auto h = result.series.Summarize(name, "hellinger");
    const auto c = result.series.Summarize(name, "counters");
    ranking.push_back({{"algorithm", name},
                       {"mean_hellinger", h.mean},
                       {"max_hellinger", h.max},
                       {"mean_counters", c.mean}});
    char line[160];
    std::snprintf(line, sizeof(line), "%-5zu %-21s %-15.6f %-14.6f %.1f\n", ++rank,
                  name.c_str(), h.mean, h.max, c.mean);
    log << line;
  }
  WriteJsonFile(out / (run + ".distance.json"),
                json{{"kind", "distance"},
                     {"config", config},
                     {"fingerprint", FingerprintToJson(fp)},
                     {"ranking", ranking}});
}

void CmdRankImbalance(const json& config, const fs::path& out, std::ostream& log) {
  const std::uint64_t seed = SeedOf(config);
  const std::string run = RunName(config);
  const std::string input = StringOr(config, "input", "");
  if (input.empty()) throw ValidationError("config lacks 'input' stream");
  const json imbalance = config.value("imbalance", json::object());
  ImbalanceBenchmarkOptions options;
  options.batch_size = UintOr(config, "batch_size", kDefaultBatch);
  options.top_k = UintOr(config, "top_k", kDefaultTopK);
  options.partitions = UintOr(imbalance, "partitions", 5);
  if (options.partitions == 0) throw ValidationError("partitions must be >= 1");
  options.decider = MakeDecider(StringOr(imbalance, "decider", "imbalance_threshold:10"));
  options.repartitioner = MakeRepartitioner(StringOr(imbalance, "repartitioner", "greedy_lpt"));
  const auto samplers = SamplersFrom(config);
  const LoadedStream loaded = LoadStream(out, input);
  auto oracle = std::make_shared<const Oracle>(loaded.stream.metadata);

  BenchmarkSeries merged;
  json runs = json::array();
  std::vector<std::pair<double, std::string>> order;
  for (const auto& s : samplers) {
    const auto factory = MakeSamplerFactory(s.spec, ContextFor(oracle, seed, s.name));
    const auto result = RunImbalanceBenchmark(loaded.stream, s.name, factory, options);
    for (const auto& row : result.series.rows()) {
      merged.Add(row.batch_index, row.algorithm, row.metric, row.value);
    }
    const RunFingerprint fp{loaded.digest, options.partitions, options.decider->Spec(),
                            options.repartitioner->Spec(), options.batch_size,
                            s.name + "=" + s.spec.Canonical(), seed};
    const auto summary = result.series.Summarize(s.name, "imbalance");
    const auto fired = result.series.Summarize(s.name, "repartitioned");
    runs.push_back({{"algorithm", s.name},
                    {"fingerprint", FingerprintToJson(fp)},
                    {"mean_imbalance", summary.mean},
                    {"max_imbalance", summary.max},
                    {"repartitions", static_cast<std::uint64_t>(fired.mean * fired.batches + 0.5)}});
    order.emplace_back(summary.mean, s.name);
  }
  std::sort(order.begin(), order.end());

  const RunFingerprint fp{loaded.digest, options.partitions, options.decider->Spec(),
                          options.repartitioner->Spec(), options.batch_size,
                          JoinSpecs(samplers), seed};
  const std::string digest = fp.Digest();
  WriteSeriesCsv(out / (run + ".imbalance.csv"), digest, merged);
  json ranking = json::array();
  for (const auto& [mean, name] : order) ranking.push_back(name);
  WriteJsonFile(out / (run + ".imbalance.json"),
                json{{"kind", "imbalance"},
                     {"config", config},
                     {"fingerprint", FingerprintToJson(fp)},
                     {"runs", runs},
                     {"ranking", ranking}});

  log << "fingerprint " << digest << "\n";
  log << "rank  algorithm             mean_imbalance_%\n";
  std::size_t rank = 0;
  for (const auto& [mean, name] : order) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-5zu %-21s %.4f\n", ++rank, name.c_str(), mean);
    log << line;
  }
}

void CmdOptimize(const json& config, const fs::path& out, std::ostream& log) {
  const std::uint64_t seed = SeedOf(config);
  const std::string run = RunName(config);
  const json& opt = Section(config, "optimize");
  const json inputs = opt.value("inputs", json::array());
  if (!inputs.is_array() || inputs.empty()) throw ValidationError("optimize needs input streams");

  std::vector<LoadedStream> streams;
  std::string stream_ids;
  for (const auto& name : inputs) {
    if (!name.is_string()) throw ValidationError("optimize inputs must be stream names");
    streams.push_back(LoadStream(out, name.get<std::string>()));
    stream_ids += (stream_ids.empty() ? "" : "+") + streams.back().digest;
  }

  FitnessSpec fitness;
  fitness.base = SamplerSpecFromJson(Section(opt, "sampler"));
  for (const auto& s : streams) fitness.streams.push_back(&s.stream);
  fitness.batch_size = UintOr(config, "batch_size", kDefaultBatch);
  fitness.top_k = UintOr(config, "top_k", kDefaultTopK);
  fitness.seed = DeriveSeed(seed, "sampler:optimize");
  const json weights = opt.value("weights", json::object());
  fitness.hellinger_weight = weights.value("hellinger", 1.0);
  fitness.counters_weight = weights.value("counters", 0.0);
  fitness.time_ms_weight = weights.value("time_ms", 0.0);
  fitness.anti_overfitting = opt.value("anti_overfitting", true);

  std::vector<ParamDef> defs;
  for (const auto& p : Section(opt, "params")) defs.push_back(ParamDefFromJson(p));
  ParamSpace space(std::move(defs));
  space.BoundWindows(ShortestStream(fitness));

  std::vector<Config> initial;
  for (const auto& c : Section(opt, "initial")) initial.push_back(ConfigFromJson(c));

  OptimizeOptions options;
  options.generations = UintOr(opt, "generations", 10);
  options.survivors = UintOr(opt, "survivors", 2);
  options.children_per_survivor = UintOr(opt, "children_per_survivor", 4);
  options.seed = DeriveSeed(seed, "optimizer");

  std::string param_names;
  for (const auto& p : space.params()) param_names += "," + p.name;
  const RunFingerprint fp{stream_ids, 0, "none", "none", fitness.batch_size,
                          fitness.base.Canonical() + "|tune" + param_names, seed};
  const auto result = Optimize(space, initial, MakeFitness(fitness), options);

  const std::string digest = fp.Digest();
  std::ostringstream csv;
  csv << "# fingerprint=" << digest << "\n";
  csv << "generation,rank,fitness,config\n";
  for (const auto& gen : result.history) {
    std::size_t rank = 0;
    for (const auto& ind : gen.population) {
      csv << gen.generation << ',' << ++rank << ',' << ExactDouble(ind.fitness) << ",\""
          << CanonicalConfig(ind.config) << "\"\n";
    }
  }
  WriteTextFile(out / (run + ".optimize.csv"), csv.str());
  WriteJsonFile(out / (run + ".optimize.json"),
                json{{"kind", "optimize"},
                     {"config", config},
                     {"fingerprint", FingerprintToJson(fp)},
                     {"best", {{"config", result.best.config}, {"fitness", result.best.fitness}}},
                     {"evaluations", result.evaluations}});
  log << "fingerprint " << digest << "\n";
  log << "best " << CanonicalConfig(result.best.config) << " fitness "
      << ExactDouble(result.best.fitness) << " after " << result.evaluations
      << " evaluations\n";
}

std::vector<std::string> CmdVerify(const fs::path& out, std::ostream& log) {
  std::error_code ec;
  if (!fs::is_directory(out, ec)) throw IoError(out.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(out)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::string> problems;
  std::size_t checked = 0;
  auto ends_with = [](const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  for (const auto& path : files) {
    const std::string file = path.filename().string();
    if (ends_with(file, ".meta.json")) {
      const std::string name = file.substr(0, file.size() - 10);
      const json meta = ReadJsonFile(path);
      ++checked;
      if (!meta.contains("config") || meta.value("fingerprint", "") != ConfigDigest(meta.at("config"))) {
        problems.push_back(file + ": fingerprint does not match embedded config");
      }
      const auto keys = ReadStreamFile(out / (name + ".dbs"));
      if (meta.value("stream_digest", "") != StreamDigest(keys)) {
        problems.push_back(name + ".dbs: content does not match stream_digest");
      }
    } else if (ends_with(file, ".json")) {
      const json run = ReadJsonFile(path);
      if (!run.is_object() || !run.contains("kind") || !run.contains("fingerprint")) continue;
      ++checked;
      const auto& fpj = run.at("fingerprint");
      const std::string recomputed = FingerprintFromJson(fpj).Digest();
      if (fpj.value("digest", "") != recomputed) {
        problems.push_back(file + ": fingerprint digest does not match its fields");
      }
      const std::string stem = file.substr(0, file.size() - 5);
      std::vector<fs::path> csvs{out / (stem + ".csv")};
      if (run.at("kind") == "distance") csvs.push_back(out / (stem + ".timings.csv"));
      for (const auto& csv : csvs) {
        if (!fs::exists(csv)) continue;
        const std::string text = ReadTextFile(csv);
        const std::string expected = "# fingerprint=" + recomputed + "\n";
        if (text.compare(0, expected.size(), expected) != 0) {
          problems.push_back(csv.filename().string() + ": fingerprint line does not match " + file);
        }
      }
    }
  }
  log << "verified " << checked << " file(s) in " << out.string() << ": "
      << (problems.empty() ? "ok" : std::to_string(problems.size()) + " problem(s)") << "\n";
  for (const auto& p : problems) log << "  " << p << "\n";
  return problems;
}

void CmdCompare(const fs::path& a, const fs::path& b, std::ostream& log) {
  auto load = [](const fs::path& p) {
    const json j = ReadJsonFile(p);
    if (!j.contains("fingerprint")) throw ValidationError(p.string() + " has no fingerprint");
    return FingerprintFromJson(j.at("fingerprint"));
  };
  RequireComparable(load(a), load(b));
  log << "comparable: " << a.filename().string() << " and " << b.filename().string() << "\n";
}

}  // namespace driftbench::cli

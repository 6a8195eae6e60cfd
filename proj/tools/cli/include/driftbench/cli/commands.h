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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace driftbench::cli {

using nlohmann::json;

// Every command reads its inputs from and writes its outputs to `out`,
// and prints a short human summary to `log`. Errors surface as
// ValidationError (bad input) or IoError (filesystem).

// Writes <name>.dbs and <name>.meta.json for every config stream.
void CmdGenerate(const json& config, const std::filesystem::path& out, std::ostream& log);

// For every "bursts" entry reads <input>.dbs and writes <output>.dbs,
// <output>.meta.json and <output>.bursts.csv.
void CmdBurst(const json& config, const std::filesystem::path& out, std::ostream& log);

// Writes <run>.distance.csv, <run>.distance.timings.csv and
// <run>.distance.json.
void CmdRankDistance(const json& config, const std::filesystem::path& out,
                     std::ostream& log);

// Writes <run>.imbalance.csv and <run>.imbalance.json.
void CmdRankImbalance(const json& config, const std::filesystem::path& out,
                      std::ostream& log);

// Writes <run>.optimize.csv and <run>.optimize.json.
void CmdOptimize(const json& config, const std::filesystem::path& out, std::ostream& log);

// Re-derives the digests and fingerprints recorded in `out`. Returns the
// list of problems found; empty means everything checks out.
std::vector<std::string> CmdVerify(const std::filesystem::path& out, std::ostream& log);

// Throws FingerprintMismatch unless two run JSON files may be ranked
// against each other.
void CmdCompare(const std::filesystem::path& a, const std::filesystem::path& b,
                std::ostream& log);

}  // namespace driftbench::cli

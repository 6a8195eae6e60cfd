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

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "driftbench/core/metadata.h"

namespace driftbench::cli {

using nlohmann::json;

// Builds the effective run config: the named preset (if any), then the
// config file merged over it as a JSON merge patch, then the seed override.
// A config without "seed" gets seed 0. Throws ValidationError for unknown
// presets and IoError for unreadable files.
json LoadRunConfig(const std::optional<std::string>& config_path,
                   const std::optional<std::string>& preset,
                   const std::optional<std::uint64_t>& seed);

// Returns the preset config; throws ValidationError for an unknown name.
json Preset(const std::string& name);

// Stream description from a config "streams" entry:
//   {"name", "n", "num_keys",
//    "distributions": [{"id", "zipf": {"exponent", "perm_seed"?, "permute"?}}
//                      | {"id", "weights": [[key, weight], ...]}],
//    "drifts": [{"at", "from", "to"} | {"start", "end", "from", "to"}]}
// "permute": true derives the permutation seed from the master seed.
// Throws ValidationError for malformed entries.
StreamMetadata StreamFromConfig(const json& stream, std::uint64_t master_seed);

std::uint64_t SeedOf(const json& config);

}  // namespace driftbench::cli

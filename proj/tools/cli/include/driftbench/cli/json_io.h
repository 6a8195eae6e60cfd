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

#include <nlohmann/json.hpp>

#include "driftbench/core/metadata.h"
#include "driftbench/generator/burst.h"
#include "driftbench/optimizer/param_space.h"
#include "driftbench/ranking/fingerprint.h"
#include "driftbench/ranking/sampler_spec.h"

namespace driftbench::cli {

using nlohmann::json;

// Conversions throw ValidationError on missing or mistyped fields.
json MetadataToJson(const StreamMetadata& metadata);
StreamMetadata MetadataFromJson(const json& j);

json SamplerSpecToJson(const SamplerSpec& spec);
SamplerSpec SamplerSpecFromJson(const json& j);

BurstConfig BurstConfigFromJson(const json& j);
ParamDef ParamDefFromJson(const json& j);
Config ConfigFromJson(const json& j);

json FingerprintToJson(const RunFingerprint& fp);
RunFingerprint FingerprintFromJson(const json& j);

// Pretty-printed with a trailing newline. Throws IoError.
void WriteJsonFile(const std::filesystem::path& path, const json& j);
// Throws IoError when unreadable and ValidationError when not JSON.
json ReadJsonFile(const std::filesystem::path& path);

}  // namespace driftbench::cli

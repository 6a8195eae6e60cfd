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
#include <span>
#include <string>
#include <vector>

#include "driftbench/core/types.h"

namespace driftbench::cli {

// Stream files: the 8 bytes "DBSTRM01", n as little-endian u64, then n keys
// as little-endian u64.
inline constexpr char kStreamMagic[] = "DBSTRM01";

// Both throw IoError on filesystem failures or malformed files.
void WriteStreamFile(const std::filesystem::path& path, std::span<const Key> keys);
std::vector<Key> ReadStreamFile(const std::filesystem::path& path);

// FNV-1a 64 over the little-endian key bytes, as 16 hex digits.
std::string StreamDigest(std::span<const Key> keys);

}  // namespace driftbench::cli

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
#include <string>

#include "driftbench/ranking/series.h"

namespace driftbench::cli {

// Writes "# fingerprint=<digest>", the header
// batch_index,algorithm,metric,value and one row per measurement, values
// in %.17g. Throws IoError.
void WriteSeriesCsv(const std::filesystem::path& path, const std::string& digest,
                    const BenchmarkSeries& series);

// Writes text to a file, replacing it. Throws IoError.
void WriteTextFile(const std::filesystem::path& path, const std::string& text);
std::string ReadTextFile(const std::filesystem::path& path);

// %.17g
std::string ExactDouble(double value);

}  // namespace driftbench::cli

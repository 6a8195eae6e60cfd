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

#include "driftbench/cli/output.h"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "driftbench/core/types.h"

namespace driftbench::cli {

std::string ExactDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void WriteSeriesCsv(const std::filesystem::path& path, const std::string& digest,
                    const BenchmarkSeries& series) {
  std::ostringstream out;
  out << "# fingerprint=" << digest << "\n";
  out << "batch_index,algorithm,metric,value\n";
  for (const auto& row : series.rows()) {
    out << row.batch_index << ',' << row.algorithm << ',' << row.metric << ','
        << ExactDouble(row.value) << '\n';
  }
  WriteTextFile(path, out.str());
}

}  // namespace driftbench::cli

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

#include "driftbench/cli/stream_file.h"

#include <cstring>
#include <fstream>
#include <iterator>

#include "driftbench/generator/rng.h"
#include "driftbench/ranking/fingerprint.h"

namespace driftbench::cli {
namespace {

constexpr std::size_t kHeaderBytes = 16;

void PutU64(std::uint64_t v, char* out) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<char>((v >> (8 * i)) & 0xff);
}

std::uint64_t GetU64(const char* in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[i])) << (8 * i);
  }
  return v;
}

std::string Encode(std::span<const Key> keys) {
  std::string bytes(keys.size() * 8, '\0');
  for (std::size_t i = 0; i < keys.size(); ++i) PutU64(keys[i], &bytes[8 * i]);
  return bytes;
}

}  // namespace

void WriteStreamFile(const std::filesystem::path& path, std::span<const Key> keys) {
  std::string header(kHeaderBytes, '\0');
  std::memcpy(header.data(), kStreamMagic, 8);
  PutU64(keys.size(), &header[8]);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  const std::string body = Encode(keys);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<Key> ReadStreamFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open stream file " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() < kHeaderBytes || bytes.compare(0, 8, kStreamMagic) != 0) {
    throw IoError(path.string() + " is not a stream file");
  }
  const std::uint64_t n = GetU64(&bytes[8]);
  if ((bytes.size() - kHeaderBytes) / 8 != n || (bytes.size() - kHeaderBytes) % 8 != 0) {
    throw IoError(path.string() + " is truncated or has trailing bytes");
  }
  std::vector<Key> keys(n);
  for (std::uint64_t i = 0; i < n; ++i) keys[i] = GetU64(&bytes[kHeaderBytes + 8 * i]);
  return keys;
}

std::string StreamDigest(std::span<const Key> keys) {
  return HexDigest(Fnv1a64(Encode(keys)));
}

}  // namespace driftbench::cli

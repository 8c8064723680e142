/*
 * Copyright 2026 the scsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "scc/model.hpp"

namespace scc {

/// N equal-length files of raw bytes.
struct Library {
  std::vector<std::vector<std::uint8_t>> files;

  std::size_t file_bytes() const { return files.empty() ? 0 : files[0].size(); }

  /// Deterministic pseudorandom content.
  static Library random(int num_files, std::size_t bytes_per_file, std::uint64_t seed);
};

/// Uncoded placement: cache lambda stores every mini-file whose storage set
/// contains lambda (|set| = t, all files, all mini indices). Depends only on
/// (N, Lambda, t, N0), never on the association or demand.
std::vector<CacheContents> place(const SystemParams& params);

/// Files cut into C(Lambda,t)*N0 equal blocks each, indexed by (storage set,
/// mini). Block order within a file: storage sets in colex order, then mini
/// ascending; concatenating in that order reproduces the file.
class MaterializedLibrary {
 public:
  MaterializedLibrary(std::map<SubfileId, std::vector<std::uint8_t>> blocks,
                      std::size_t block_bytes)
      : blocks_(std::move(blocks)), block_bytes_(block_bytes) {}

  const std::vector<std::uint8_t>& block(const SubfileId& id) const;
  std::size_t block_bytes() const { return block_bytes_; }
  const std::map<SubfileId, std::vector<std::uint8_t>>& blocks() const {
    return blocks_;
  }

 private:
  std::map<SubfileId, std::vector<std::uint8_t>> blocks_;
  std::size_t block_bytes_;
};

/// Requires the file size to be divisible by C(Lambda,t)*N0.
MaterializedLibrary materialize(const Library& library, const SystemParams& params);

}  // namespace scc

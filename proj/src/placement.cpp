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

#include "scc/placement.hpp"

#include <random>
#include <stdexcept>

namespace scc {

Library Library::random(int num_files, std::size_t bytes_per_file, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Library lib;
  lib.files.resize(num_files);
  for (auto& f : lib.files) {
    f.resize(bytes_per_file);
    for (auto& b : f) b = static_cast<std::uint8_t>(rng() & 0xff);
  }
  return lib;
}

std::vector<CacheContents> place(const SystemParams& params) {
  const int caches = params.num_caches;
  const int t = params.memory_t;
  std::vector<CacheContents> out(caches);
  for (int lam = 1; lam <= caches; ++lam) out[lam - 1].cache = lam;
  if (t == 0) return out;
  for (std::uint64_t set : subsets_of_size(caches, t)) {
    for (int lam : mask_elements(set)) {
      auto& stored = out[lam - 1].stored;
      for (int n = 1; n <= params.num_files; ++n)
        for (int l = 1; l <= params.antennas; ++l)
          stored.insert(SubfileId{n, set, l});
    }
  }
  return out;
}

const std::vector<std::uint8_t>& MaterializedLibrary::block(const SubfileId& id) const {
  auto it = blocks_.find(id);
  if (it == blocks_.end())
    throw std::invalid_argument("MaterializedLibrary: unknown subfile id");
  return it->second;
}

MaterializedLibrary materialize(const Library& library, const SystemParams& params) {
  const int caches = params.num_caches;
  const int t = params.memory_t;
  const int streams = params.antennas;
  if (static_cast<int>(library.files.size()) != params.num_files)
    throw std::invalid_argument("materialize: library must hold exactly N files");
  const BigInt pieces_big = binomial(caches, t) * streams;
  const std::size_t pieces = pieces_big.get_ui();
  const std::size_t bytes = library.file_bytes();
  if (pieces == 0 || bytes % pieces != 0)
    throw std::invalid_argument("materialize: file size not divisible into mini-files");
  const std::size_t block_bytes = bytes / pieces;

  std::map<SubfileId, std::vector<std::uint8_t>> blocks;
  const auto sets = subsets_of_size(caches, t);
  for (int n = 1; n <= static_cast<int>(library.files.size()); ++n) {
    const auto& file = library.files[n - 1];
    if (file.size() != bytes)
      throw std::invalid_argument("materialize: files must have equal length");
    std::size_t offset = 0;
    for (std::uint64_t set : sets) {
      for (int l = 1; l <= streams; ++l) {
        blocks.emplace(SubfileId{n, set, l},
                       std::vector<std::uint8_t>(file.begin() + offset,
                                                 file.begin() + offset + block_bytes));
        offset += block_bytes;
      }
    }
  }
  return MaterializedLibrary(std::move(blocks), block_bytes);
}

}  // namespace scc

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

#include "scc/decode.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scc {

namespace {

// Mini-files user `user` (attached to `cache`) must obtain over the air.
std::vector<SubfileId> needed_minifiles(int cache, int file, const SystemParams& params) {
  std::vector<SubfileId> out;
  for (std::uint64_t set : subsets_of_size(params.num_caches, params.memory_t)) {
    if (mask_contains(set, cache)) continue;
    for (int l = 1; l <= params.antennas; ++l) out.push_back(SubfileId{file, set, l});
  }
  return out;
}

void insert_unique(std::vector<SubfileId>& list, const SubfileId& id) {
  if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
}

}  // namespace

DecodeReport decode_symbolic(const Transcript& transcript,
                             const std::vector<CacheContents>& caches,
                             const Association& assoc, const DemandVector& demand,
                             const SystemParams& params) {
  assoc.validate(params.num_users);
  const std::vector<int> owner = assoc.cache_of_user();

  std::map<int, std::set<SubfileId>> usable;  // user -> cleanly delivered
  DecodeReport report;
  for (int user = 1; user <= params.num_users; ++user)
    report.per_user[user] = UserDecodeResult{};

  for (const auto& tx : transcript.transmissions) {
    for (std::size_t gi = 0; gi < tx.groups.size(); ++gi) {
      const auto& group = tx.groups[gi];
      for (std::size_t pos = 0; pos < group.users.size(); ++pos) {
        const int user = group.users[pos];
        const auto& cache = caches.at(owner[user] - 1);
        bool clean = true;
        for (std::size_t gj = 0; gj < tx.groups.size(); ++gj) {
          if (gj == gi) continue;
          for (const auto& interferer : tx.groups[gj].payload) {
            if (!cache.has(interferer)) {
              insert_unique(report.per_user[user].uncancellable, interferer);
              clean = false;
            }
          }
        }
        if (clean) usable[user].insert(group.payload[pos]);
      }
    }
  }

  for (int user = 1; user <= params.num_users; ++user) {
    auto& res = report.per_user[user];
    const auto& got = usable[user];
    for (const auto& id : needed_minifiles(owner[user], demand.d[user - 1], params))
      if (!got.count(id)) res.missing.push_back(id);
    res.recovered = res.missing.empty() && res.uncancellable.empty();
  }
  return report;
}

DecodeReport decode_xor(const Transcript& transcript,
                        const std::vector<CacheContents>& caches,
                        const Library& library, const Association& assoc,
                        const DemandVector& demand, const SystemParams& params) {
  if (params.antennas != 1)
    throw std::invalid_argument("decode_xor: single-stream transcripts only");
  assoc.validate(params.num_users);
  const std::vector<int> owner = assoc.cache_of_user();
  const MaterializedLibrary mat = materialize(library, params);
  const std::size_t block_bytes = mat.block_bytes();

  // Wire bytes per transmission: XOR of the payload blocks.
  std::vector<std::vector<std::uint8_t>> wire(transcript.transmissions.size());
  for (std::size_t i = 0; i < transcript.transmissions.size(); ++i) {
    std::vector<std::uint8_t> acc(block_bytes, 0);
    for (const auto& group : transcript.transmissions[i].groups)
      for (const auto& id : group.payload) {
        const auto& blk = mat.block(id);
        for (std::size_t b = 0; b < block_bytes; ++b) acc[b] ^= blk[b];
      }
    wire[i] = std::move(acc);
  }

  DecodeReport report;
  for (int user = 1; user <= params.num_users; ++user) {
    auto& res = report.per_user[user];
    const int cache_id = owner[user];
    const auto& cache = caches.at(cache_id - 1);
    const int want = demand.d[user - 1];

    std::map<SubfileId, std::vector<std::uint8_t>> decoded;
    for (std::size_t i = 0; i < transcript.transmissions.size(); ++i) {
      const auto& tx = transcript.transmissions[i];
      for (const auto& group : tx.groups) {
        auto it = std::find(group.users.begin(), group.users.end(), user);
        if (it == group.users.end()) continue;
        const SubfileId intended =
            group.payload[static_cast<std::size_t>(it - group.users.begin())];
        std::vector<std::uint8_t> acc = wire[i];
        bool clean = true;
        for (const auto& other : tx.groups) {
          for (const auto& id : other.payload) {
            if (id == intended) continue;
            if (!cache.has(id)) {
              insert_unique(res.uncancellable, id);
              clean = false;
              continue;
            }
            const auto& blk = mat.block(id);
            for (std::size_t b = 0; b < block_bytes; ++b) acc[b] ^= blk[b];
          }
        }
        if (clean) decoded[intended] = std::move(acc);
      }
    }

    // Reassemble the requested file from cached blocks plus decoded blocks.
    std::vector<std::uint8_t> assembled;
    assembled.reserve(library.file_bytes());
    bool complete = true;
    for (std::uint64_t set : subsets_of_size(params.num_caches, params.memory_t)) {
      for (int l = 1; l <= params.antennas; ++l) {
        const SubfileId id{want, set, l};
        if (mask_contains(set, cache_id)) {
          if (!cache.has(id)) throw std::logic_error("decode_xor: cache misses its own block");
          const auto& blk = mat.block(id);
          assembled.insert(assembled.end(), blk.begin(), blk.end());
        } else if (auto it = decoded.find(id); it != decoded.end()) {
          assembled.insert(assembled.end(), it->second.begin(), it->second.end());
        } else {
          res.missing.push_back(id);
          complete = false;
        }
      }
    }
    res.recovered = complete && res.uncancellable.empty() &&
                    assembled == library.files[want - 1];
  }
  return report;
}

}  // namespace scc

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

#include "scc/model.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace scc {

SystemParams::SystemParams(int files, int users, int caches, int streams, int t)
    : num_files(files),
      num_users(users),
      num_caches(caches),
      antennas(streams),
      memory_t(t) {
  if (files < 1 || users < 1 || caches < 1)
    throw std::invalid_argument("SystemParams: counts must be positive");
  if (files < users)
    throw std::invalid_argument("SystemParams: requires at least as many files as users");
  if (caches > users)
    throw std::invalid_argument("SystemParams: more caches than users");
  if (streams < 1) throw std::invalid_argument("SystemParams: antennas must be >= 1");
  if (t < 0 || t > caches)
    throw std::invalid_argument("SystemParams: memory_t outside [0, caches]");
  if (caches > 62)
    throw std::invalid_argument("SystemParams: at most 62 caches supported");
}

Profile::Profile(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("Profile: empty");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0) throw std::invalid_argument("Profile: negative count");
    if (i > 0 && counts_[i] > counts_[i - 1])
      throw std::invalid_argument("Profile: counts must be non-increasing");
  }
}

Profile Profile::uniform(int users, int caches) {
  if (caches < 1 || users % caches != 0)
    throw std::invalid_argument("Profile::uniform: caches must divide users");
  return Profile(std::vector<int>(caches, users / caches));
}

int Profile::total_users() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool Profile::valid_for_streams(int streams) const {
  for (int c : counts_)
    if (c > 0 && c < streams) return false;
  return true;
}

int Association::users() const {
  int n = 0;
  for (const auto& list : per_cache) n += static_cast<int>(list.size());
  return n;
}

void Association::validate(int expected_users) const {
  std::vector<bool> seen(expected_users + 1, false);
  int total = 0;
  for (const auto& list : per_cache) {
    for (int u : list) {
      if (u < 1 || u > expected_users)
        throw std::invalid_argument("Association: user id out of range");
      if (seen[u]) throw std::invalid_argument("Association: duplicate user");
      seen[u] = true;
      ++total;
    }
  }
  if (total != expected_users)
    throw std::invalid_argument("Association: does not cover all users");
}

std::vector<int> Association::cache_of_user() const {
  std::vector<int> owner(users() + 1, 0);
  for (int lam = 1; lam <= caches(); ++lam)
    for (int u : per_cache[lam - 1]) owner.at(u) = lam;
  return owner;
}

Profile profile_of(const Association& assoc) {
  std::vector<int> counts;
  counts.reserve(assoc.per_cache.size());
  for (const auto& list : assoc.per_cache)
    counts.push_back(static_cast<int>(list.size()));
  std::sort(counts.begin(), counts.end(), std::greater<int>());
  return Profile(std::move(counts));
}

std::vector<int> sort_permutation(const std::vector<int>& sizes) {
  std::vector<int> idx(sizes.size());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return sizes[a - 1] > sizes[b - 1]; });
  return idx;
}

std::vector<int> sort_permutation(const Association& assoc) {
  std::vector<int> sizes;
  sizes.reserve(assoc.per_cache.size());
  for (const auto& list : assoc.per_cache)
    sizes.push_back(static_cast<int>(list.size()));
  return sort_permutation(sizes);
}

void DemandVector::validate(const SystemParams& params, bool require_distinct) const {
  if (static_cast<int>(d.size()) != params.num_users)
    throw std::invalid_argument("DemandVector: wrong length");
  std::set<int> seen;
  for (int n : d) {
    if (n < 1 || n > params.num_files)
      throw std::invalid_argument("DemandVector: file id out of range");
    if (require_distinct && !seen.insert(n).second)
      throw std::invalid_argument("DemandVector: repeated file in worst-case demand");
  }
}

DemandVector worst_case_demand(const SystemParams& params, std::uint64_t seed) {
  // Partial Fisher-Yates over [N]; raw engine output keeps the draw
  // reproducible across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<int> files(params.num_files);
  std::iota(files.begin(), files.end(), 1);
  DemandVector out;
  out.d.reserve(params.num_users);
  for (int i = 0; i < params.num_users; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (files.size() - i));
    std::swap(files[i], files[j]);
    out.d.push_back(files[i]);
  }
  return out;
}

DemandBlocks reorder_demand(const Association& assoc, const DemandVector& demand) {
  DemandBlocks blocks;
  blocks.files.resize(assoc.caches());
  for (int lam = 1; lam <= assoc.caches(); ++lam)
    for (int u : assoc.per_cache[lam - 1])
      blocks.files[lam - 1].push_back(demand.d.at(u - 1));
  return blocks;
}

std::vector<int> DemandBlocks::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(files.size());
  for (const auto& b : files) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

int DemandBlocks::total() const {
  int n = 0;
  for (const auto& b : files) n += static_cast<int>(b.size());
  return n;
}

}  // namespace scc

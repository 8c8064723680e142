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
#include <set>
#include <tuple>
#include <vector>

#include "scc/combinatorics.hpp"
#include "scc/rational.hpp"

namespace scc {

/// Instance parameters: N files, K users, Lambda caches, N0 transmit streams,
/// and the integer cache-redundancy parameter t (t/Lambda of each file fits in
/// one cache). Users and files are 1-based dense ids.
struct SystemParams {
  int num_files;   // N
  int num_users;   // K
  int num_caches;  // Lambda
  int antennas;    // N0
  int memory_t;    // t, in [0, Lambda]

  SystemParams(int files, int users, int caches, int streams, int t);

  Rational gamma() const { return Rational(memory_t, num_caches); }
  Rational cache_size() const { return Rational(num_files) * gamma(); }
};

/// Sorted (non-increasing) histogram of users per cache. The class label that
/// determines worst-case delay; entries may be zero.
class Profile {
 public:
  explicit Profile(std::vector<int> counts);
  static Profile uniform(int users, int caches);

  int caches() const { return static_cast<int>(counts_.size()); }
  int total_users() const;
  /// r-th largest user count, 1-based rank.
  int count(int rank) const { return counts_.at(rank - 1); }
  const std::vector<int>& counts() const { return counts_; }

  /// True when every nonzero entry is at least `streams`; the delivery scheme
  /// requires it so an N0-tuple never repeats a user.
  bool valid_for_streams(int streams) const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<int> counts_;
};

/// Ordered partition of users {1..K} into caches. Order within a cache is the
/// service order used by delivery.
struct Association {
  std::vector<std::vector<int>> per_cache;  // per_cache[lambda-1] = user ids

  int caches() const { return static_cast<int>(per_cache.size()); }
  int users() const;
  /// Throws unless the lists are disjoint and cover exactly {1..expected_users}.
  void validate(int expected_users) const;
  /// cache id (1-based) for each user; index 0 unused.
  std::vector<int> cache_of_user() const;
};

Profile profile_of(const Association& assoc);

/// Permutation sigma with sizes[sigma[0]-1] >= sizes[sigma[1]-1] >= ...;
/// ties broken by ascending index. Entries are 1-based indices.
std::vector<int> sort_permutation(const std::vector<int>& sizes);
std::vector<int> sort_permutation(const Association& assoc);

/// One requested file per user, 1-based file ids.
struct DemandVector {
  std::vector<int> d;

  int users() const { return static_cast<int>(d.size()); }
  void validate(const SystemParams& params, bool require_distinct) const;
};

/// K distinct file ids drawn deterministically from the seed. Requires N >= K.
DemandVector worst_case_demand(const SystemParams& params, std::uint64_t seed);

/// Demand reordered into per-cache blocks: files requested at cache 1, then
/// cache 2, ... Fully determines the side-information structure.
struct DemandBlocks {
  std::vector<std::vector<int>> files;  // files[lambda-1]

  int caches() const { return static_cast<int>(files.size()); }
  std::vector<int> block_sizes() const;
  int total() const;
};

DemandBlocks reorder_demand(const Association& assoc, const DemandVector& demand);

/// One mini-file: piece of `file` stored at the caches in `storage_set`
/// (bitmask over caches), `mini` in [1, N0].
struct SubfileId {
  int file = 0;
  std::uint64_t storage_set = 0;
  int mini = 1;

  friend bool operator==(const SubfileId& a, const SubfileId& b) {
    return a.file == b.file && a.storage_set == b.storage_set && a.mini == b.mini;
  }
  friend bool operator<(const SubfileId& a, const SubfileId& b) {
    return std::tie(a.file, a.storage_set, a.mini) <
           std::tie(b.file, b.storage_set, b.mini);
  }
};

/// Everything one cache stores. Every id satisfies cache in storage_set.
struct CacheContents {
  int cache = 0;
  std::set<SubfileId> stored;

  bool has(const SubfileId& id) const { return stored.count(id) != 0; }
};

}  // namespace scc

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

#include "scc/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scc {

namespace {

// Ordered selections of K distinct files out of [N], lexicographic.
void for_each_worst_case_demand(int num_files, int num_users,
                                const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> demand(num_users, 0);
  std::vector<bool> used(num_files + 1, false);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == num_users) {
      fn(demand);
      return;
    }
    for (int n = 1; n <= num_files; ++n) {
      if (used[n]) continue;
      used[n] = true;
      demand[pos] = n;
      rec(pos + 1);
      used[n] = false;
    }
  };
  rec(0);
}

}  // namespace

BigInt demand_class_size(const Profile& profile, const SystemParams& params) {
  return falling_factorial(params.num_files, params.num_users) *
         factorial(profile.caches());
}

void for_each_class_demand(const Profile& profile, const SystemParams& params,
                           std::uint64_t cap,
                           const std::function<void(const ClassDemand&)>& fn) {
  if (profile.total_users() != params.num_users)
    throw std::invalid_argument("for_each_class_demand: profile does not sum to K");
  const BigInt size = demand_class_size(profile, params);
  if (size > BigInt(static_cast<unsigned long>(cap)))
    throw std::invalid_argument("for_each_class_demand: class size exceeds the cap");

  const int caches = profile.caches();
  std::vector<int> pi(caches);
  for_each_worst_case_demand(params.num_files, params.num_users,
                             [&](const std::vector<int>& demand) {
    // Split the demand into blocks of the profile's sizes, largest first.
    std::vector<std::vector<int>> sorted_blocks(caches);
    int offset = 0;
    for (int r = 1; r <= caches; ++r) {
      const int len = profile.count(r);
      sorted_blocks[r - 1].assign(demand.begin() + offset, demand.begin() + offset + len);
      offset += len;
    }
    std::iota(pi.begin(), pi.end(), 1);
    do {
      // Block of original rank r lands at cache position pi[r-1].
      ClassDemand element;
      element.pi = pi;
      element.blocks.files.resize(caches);
      for (int r = 1; r <= caches; ++r)
        element.blocks.files[pi[r - 1] - 1] = sorted_blocks[r - 1];
      fn(element);
    } while (std::next_permutation(pi.begin(), pi.end()));
  });
}

std::uint64_t selection_count_by_enumeration(const Profile& profile,
                                             const SystemParams& params, int file,
                                             std::uint64_t storage_set,
                                             std::uint64_t cap) {
  if (file < 1 || file > params.num_files)
    throw std::invalid_argument("selection_count_by_enumeration: bad file id");
  std::uint64_t count = 0;
  for_each_class_demand(profile, params, cap, [&](const ClassDemand& element) {
    // Locate the cache requesting `file` (demands are worst case, so at most one).
    int cache = 0;
    for (int lam = 1; lam <= element.blocks.caches() && cache == 0; ++lam) {
      const auto& block = element.blocks.files[lam - 1];
      if (std::find(block.begin(), block.end(), file) != block.end()) cache = lam;
    }
    if (cache == 0) return;
    if (mask_contains(storage_set, cache)) return;  // not a graph node at all
    // Selected iff the storage set avoids every cache ranked at or above ours.
    for (int lam : element.pi) {
      if (lam == cache) {
        ++count;
        return;
      }
      if (mask_contains(storage_set, lam)) return;
    }
  });
  return count;
}

int max_acyclic_exhaustive(const SideInfoGraph& graph, int cap_nodes) {
  const int n = static_cast<int>(graph.nodes.size());
  if (n > cap_nodes)
    throw std::invalid_argument("max_acyclic_exhaustive: graph exceeds the node cap");
  if (n > 62) throw std::invalid_argument("max_acyclic_exhaustive: too many nodes");

  std::vector<std::uint64_t> succ(n, 0), pred(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b : graph.adj[a]) {
      succ[a] |= std::uint64_t{1} << b;
      pred[b] |= std::uint64_t{1} << a;
    }

  // Adding v to an acyclic set creates a cycle iff v reaches one of its
  // in-set predecessors through in-set successors.
  auto creates_cycle = [&](std::uint64_t chosen, int v) {
    const std::uint64_t targets = pred[v] & chosen;
    if (targets == 0) return false;
    std::uint64_t frontier = succ[v] & chosen;
    std::uint64_t visited = frontier;
    while (frontier) {
      if (frontier & targets) return true;
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int u = __builtin_ctzll(f);
        f &= f - 1;
        next |= succ[u] & chosen;
      }
      frontier = next & ~visited;
      visited |= frontier;
    }
    return false;
  };

  int best = 0;
  std::function<void(int, std::uint64_t, int)> rec = [&](int pos, std::uint64_t chosen,
                                                         int size) {
    if (size + (n - pos) <= best) return;  // cannot beat the incumbent
    if (pos == n) {
      best = std::max(best, size);
      return;
    }
    if (!creates_cycle(chosen, pos))
      rec(pos + 1, chosen | (std::uint64_t{1} << pos), size + 1);
    rec(pos + 1, chosen, size);
  };
  rec(0, 0, 0);
  return best;
}

bool transmission_count_identity(const Profile& profile, const SystemParams& params) {
  const int caches = profile.caches();
  const int t = params.memory_t;

  // Round-by-round count: per round j, all (t+1)-subsets fire except those
  // drawn entirely from the a_j caches already out of users.
  BigInt by_rounds = 0;
  const int rounds = profile.count(1);
  for (int j = 1; j <= rounds; ++j) {
    int active = 0;
    for (int r = 1; r <= caches; ++r)
      if (profile.count(r) >= j) ++active;
    const int idle = caches - active;
    by_rounds += binomial(caches, t + 1) - binomial(idle, t + 1);
  }

  BigInt by_ranks = 0;
  for (int r = 1; r <= caches - t; ++r)
    by_ranks += BigInt(profile.count(r)) * binomial(caches - r, t);

  return by_rounds == by_ranks;
}

}  // namespace scc

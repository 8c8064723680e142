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
#include <functional>

#include "scc/bounds.hpp"
#include "scc/model.hpp"

namespace scc {

/// Default ceiling on P(N,K) * Lambda! for full demand-class enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Default node ceiling for the exhaustive acyclic-subgraph search.
inline constexpr int kDefaultExhaustiveNodeCap = 22;

/// One element of the worst-case demand class: block-reordered demand plus
/// the block permutation that produced it. `pi[r-1]` is the cache position
/// holding the r-th largest block, so pi is also the selection permutation
/// under which the class averaging is exact.
struct ClassDemand {
  DemandBlocks blocks;
  std::vector<int> pi;
};

/// Size of the class: P(N,K) * Lambda!.
BigInt demand_class_size(const Profile& profile, const SystemParams& params);

/// Enumerates the whole class in deterministic order (demands lexicographic,
/// then block permutations lexicographic). Throws if the class size exceeds
/// the cap.
void for_each_class_demand(const Profile& profile, const SystemParams& params,
                           std::uint64_t cap,
                           const std::function<void(const ClassDemand&)>& fn);

/// Number of appearances of subfile (file, storage_set) across the acyclic
/// selections of the whole class, counted by direct enumeration. Must agree
/// with subfile_selection_count(|storage_set|, ...) and be identical for all
/// subfiles of equal |storage_set|.
std::uint64_t selection_count_by_enumeration(const Profile& profile,
                                             const SystemParams& params, int file,
                                             std::uint64_t storage_set,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// Maximum node count over all induced acyclic subgraphs, by exhaustive
/// branch-and-bound. Throws when the graph exceeds cap_nodes.
int max_acyclic_exhaustive(const SideInfoGraph& graph,
                           int cap_nodes = kDefaultExhaustiveNodeCap);

/// Checks, with both sides computed independently, that the round-by-round
/// transmission count equals the rank-weighted closed form:
/// sum_j [C(Lambda,t+1) - C(a_j,t+1)] = sum_r L_r * C(Lambda-r,t).
bool transmission_count_identity(const Profile& profile, const SystemParams& params);

}  // namespace scc

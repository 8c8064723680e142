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
#include <vector>

#include "scc/envelope.hpp"
#include "scc/model.hpp"

namespace scc {

// ---- achievable / optimal delay ------------------------------------------

/// Per-rank coefficient c_i = sum_{r=1}^{Lambda-i} L_r * C(Lambda-r,i) / C(Lambda,i).
/// Non-increasing in i; c_0 = K, c_Lambda = 0.
Rational profile_coefficient(const Profile& profile, int i);

/// Optimal worst-case delay for the profile at memory parameter t in
/// [0, Lambda]: c_t / N0 at integer t, the lower convex envelope of those
/// points at fractional t.
Rational optimal_delay(const Profile& profile, const SystemParams& params,
                       const Rational& t);

/// Closed form K(1 - t/Lambda) / (N0 (t+1)) for the uniform profile
/// (requires caches | users). Equals optimal_delay at every integer t.
Rational uniform_delay(int users, int caches, int streams, const Rational& t);

struct DofSummary {
  Rational sum_dof;                // K(1-gamma)/T at the params' t
  Rational single_vs_multi_ratio;  // delay(N0=1) / delay(N0)
  Rational naive_gap;              // N0(1+t) / (N0+t)
};

/// Derived figures of merit at the integer t carried by params (t < Lambda).
DofSummary dof_and_ratios(const Profile& profile, const SystemParams& params);

// ---- index-coding side of the converse -------------------------------------

/// One requested subfile, viewed as an index-coding receiver that knows the
/// contents of its requester's cache.
struct GraphNode {
  int file = 0;
  std::uint64_t cached_set = 0;  // caches storing this subfile; never holds `cache`
  int cache = 0;                 // requester's cache
  int slot = 0;                  // requester's position within the cache block
};

/// Side-information graph over all requested subfiles: an edge a -> b exists
/// iff b's cache stores a.
struct SideInfoGraph {
  int num_caches = 0;
  std::vector<GraphNode> nodes;
  std::vector<std::vector<int>> adj;  // adj[a] = successors of a
};

/// All-subset subfile split of a per-cache demand: one node per requested
/// file and per storage set avoiding the requester's cache. Demands must be
/// worst case (all files distinct).
SideInfoGraph build_side_info_graph(const DemandBlocks& blocks);
SideInfoGraph build_side_info_graph(const Association& assoc, const DemandVector& demand);

struct AcyclicSelection {
  std::vector<int> nodes;  // indices into SideInfoGraph::nodes
  std::vector<int> sigma;  // generating cache permutation, rank -> cache
};

/// Nodes of rank-r's cache whose storage set avoids all caches of rank <= r.
/// The induced subgraph is acyclic for every permutation.
AcyclicSelection acyclic_selection(const SideInfoGraph& graph,
                                   const std::vector<int>& sigma);

/// Kahn-style check that the induced subgraph has no cycle.
bool induced_subgraph_is_acyclic(const SideInfoGraph& graph,
                                 const std::vector<int>& nodes);

/// Cut-set bound: sum of the selected node sizes divided by the stream count.
/// Verifies acyclicity and throws on a cyclic selection.
Rational cutset_bound(const SideInfoGraph& graph, const AcyclicSelection& selection,
                      const std::vector<Rational>& node_sizes, int streams);

// ---- averaged converse ------------------------------------------------------

/// Number of appearances of any fixed subfile stored in exactly i caches,
/// across the acyclic selections of the whole worst-case demand class.
/// Depends only on i, never on the subfile.
BigInt subfile_selection_count(int i, const Profile& profile,
                               const SystemParams& params);

/// Lower bound on the delay at memory parameter t, derived through the
/// demand-class average of cut-set bounds. Computed from
/// subfile_selection_count, an algebraic route independent of optimal_delay,
/// which it must equal exactly.
Rational converse_bound(const Profile& profile, const SystemParams& params,
                        const Rational& t);

/// x[i] = total normalized data stored in exactly i caches, i = 0..Lambda.
struct SizeDistribution {
  std::vector<Rational> x;
};

/// Value of the converse functional for one placement statistic: a valid
/// delay bound for any scheme inducing that distribution. Requires
/// sum x_i = N, x_i >= 0, and sum i*x_i <= t*N for the params' t.
Rational bound_for_distribution(const SizeDistribution& dist, const Profile& profile,
                                const SystemParams& params);

}  // namespace scc

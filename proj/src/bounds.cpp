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

#include "scc/bounds.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace scc {

namespace {

Rational eval_integer_or_envelope(const Rational& t, int caches,
                                  const std::vector<Rational>& point_values) {
  if (t < Rational(0) || t > Rational(caches))
    throw std::domain_error("memory parameter t outside [0, caches]");
  if (t.is_integer()) return point_values[t.num().get_si()];
  std::vector<EnvelopePoint> points;
  points.reserve(caches + 1);
  for (int i = 0; i <= caches; ++i) points.push_back({i, point_values[i]});
  return lower_convex_envelope(points).eval(t);
}

}  // namespace

Rational profile_coefficient(const Profile& profile, int i) {
  const int caches = profile.caches();
  if (i < 0 || i > caches)
    throw std::invalid_argument("profile_coefficient: i outside [0, caches]");
  BigInt numerator = 0;
  for (int r = 1; r <= caches - i; ++r)
    numerator += BigInt(profile.count(r)) * binomial(caches - r, i);
  return Rational(numerator, binomial(caches, i));
}

Rational optimal_delay(const Profile& profile, const SystemParams& params,
                       const Rational& t) {
  const int caches = profile.caches();
  std::vector<Rational> values;
  values.reserve(caches + 1);
  for (int i = 0; i <= caches; ++i)
    values.push_back(profile_coefficient(profile, i) / Rational(params.antennas));
  return eval_integer_or_envelope(t, caches, values);
}

Rational uniform_delay(int users, int caches, int streams, const Rational& t) {
  if (caches < 1 || users % caches != 0)
    throw std::invalid_argument("uniform_delay: caches must divide users");
  if (t < Rational(0) || t > Rational(caches))
    throw std::domain_error("uniform_delay: t outside [0, caches]");
  const Rational one_minus_gamma = Rational(1) - t / Rational(caches);
  return Rational(users) * one_minus_gamma /
         (Rational(streams) * (t + Rational(1)));
}

DofSummary dof_and_ratios(const Profile& profile, const SystemParams& params) {
  const int t = params.memory_t;
  if (t >= params.num_caches)
    throw std::domain_error("dof_and_ratios: needs t < caches");
  const Rational delay_multi = optimal_delay(profile, params, Rational(t));
  SystemParams single(params.num_files, params.num_users, params.num_caches, 1, t);
  const Rational delay_single = optimal_delay(profile, single, Rational(t));
  DofSummary out;
  const Rational served = Rational(params.num_users) * (Rational(1) - params.gamma());
  out.sum_dof = served / delay_multi;
  out.single_vs_multi_ratio = delay_single / delay_multi;
  out.naive_gap = Rational(params.antennas) * Rational(1 + t) /
                  Rational(params.antennas + t);
  return out;
}

SideInfoGraph build_side_info_graph(const DemandBlocks& blocks) {
  std::set<int> seen;
  for (const auto& block : blocks.files)
    for (int n : block)
      if (!seen.insert(n).second)
        throw std::invalid_argument(
            "build_side_info_graph: demand must request distinct files");
  SideInfoGraph graph;
  graph.num_caches = blocks.caches();
  const int caches = graph.num_caches;
  const std::uint64_t full = (std::uint64_t{1} << caches) - 1;
  for (int lam = 1; lam <= caches; ++lam) {
    const auto& files = blocks.files[lam - 1];
    for (int j = 0; j < static_cast<int>(files.size()); ++j) {
      for (std::uint64_t set = 0; set <= full; ++set) {
        if (mask_contains(set, lam)) continue;
        graph.nodes.push_back(GraphNode{files[j], set, lam, j + 1});
      }
    }
  }
  const int n = static_cast<int>(graph.nodes.size());
  graph.adj.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && mask_contains(graph.nodes[a].cached_set, graph.nodes[b].cache))
        graph.adj[a].push_back(b);
  return graph;
}

SideInfoGraph build_side_info_graph(const Association& assoc,
                                    const DemandVector& demand) {
  return build_side_info_graph(reorder_demand(assoc, demand));
}

AcyclicSelection acyclic_selection(const SideInfoGraph& graph,
                                   const std::vector<int>& sigma) {
  const int caches = graph.num_caches;
  if (static_cast<int>(sigma.size()) != caches)
    throw std::invalid_argument("acyclic_selection: sigma has wrong length");
  // forbidden[lambda] = caches ranked at or before lambda's rank
  std::vector<std::uint64_t> forbidden(caches + 1, 0);
  std::uint64_t prefix = 0;
  for (int r = 1; r <= caches; ++r) {
    prefix |= element_bit(sigma[r - 1]);
    forbidden[sigma[r - 1]] = prefix;
  }
  AcyclicSelection sel;
  sel.sigma = sigma;
  for (int idx = 0; idx < static_cast<int>(graph.nodes.size()); ++idx) {
    const auto& node = graph.nodes[idx];
    if ((node.cached_set & forbidden[node.cache]) == 0) sel.nodes.push_back(idx);
  }
  return sel;
}

bool induced_subgraph_is_acyclic(const SideInfoGraph& graph,
                                 const std::vector<int>& nodes) {
  std::vector<int> indeg(graph.nodes.size(), -1);
  for (int v : nodes) indeg[v] = 0;
  for (int u : nodes)
    for (int v : graph.adj[u])
      if (indeg[v] >= 0) ++indeg[v];
  std::deque<int> sources;
  for (int v : nodes)
    if (indeg[v] == 0) sources.push_back(v);
  std::size_t removed = 0;
  while (!sources.empty()) {
    int u = sources.front();
    sources.pop_front();
    ++removed;
    for (int v : graph.adj[u])
      if (indeg[v] > 0 && --indeg[v] == 0) sources.push_back(v);
  }
  return removed == nodes.size();
}

Rational cutset_bound(const SideInfoGraph& graph, const AcyclicSelection& selection,
                      const std::vector<Rational>& node_sizes, int streams) {
  if (node_sizes.size() != graph.nodes.size())
    throw std::invalid_argument("cutset_bound: one size per graph node required");
  if (!induced_subgraph_is_acyclic(graph, selection.nodes))
    throw std::invalid_argument("cutset_bound: selection is not acyclic");
  Rational total(0);
  for (int v : selection.nodes) total += node_sizes[v];
  return total / Rational(streams);
}

BigInt subfile_selection_count(int i, const Profile& profile,
                               const SystemParams& params) {
  const int caches = profile.caches();
  if (i < 0 || i > caches)
    throw std::invalid_argument("subfile_selection_count: i outside [0, caches]");
  const long users = params.num_users;
  BigInt sum = 0;
  for (int r = 1; r <= caches; ++r) {
    const long count = profile.count(r);
    if (count == 0) continue;  // an empty cache never hosts the file's block
    sum += falling_factorial_or_zero(caches - i - 1, r - 1) *
           factorial(caches - r) * count *
           falling_factorial_or_zero(users - 1, count - 1) *
           factorial(users - count);
  }
  return binomial(params.num_files - 1, users - 1) * sum * (caches - i);
}

Rational converse_bound(const Profile& profile, const SystemParams& params,
                        const Rational& t) {
  const int caches = profile.caches();
  // c_i recovered from the demand-class average: N * count / (Lambda! * P(N,K)).
  const BigInt normalizer =
      factorial(caches) * falling_factorial(params.num_files, params.num_users);
  std::vector<Rational> values;
  values.reserve(caches + 1);
  for (int i = 0; i <= caches; ++i) {
    const BigInt count = subfile_selection_count(i, profile, params);
    values.push_back(Rational(count * params.num_files,
                              normalizer * params.antennas));
  }
  return eval_integer_or_envelope(t, caches, values);
}

Rational bound_for_distribution(const SizeDistribution& dist, const Profile& profile,
                                const SystemParams& params) {
  const int caches = profile.caches();
  if (static_cast<int>(dist.x.size()) != caches + 1)
    throw std::invalid_argument("bound_for_distribution: need Lambda+1 entries");
  Rational mass(0), budget(0);
  for (int i = 0; i <= caches; ++i) {
    if (dist.x[i] < Rational(0))
      throw std::invalid_argument("bound_for_distribution: negative mass");
    mass += dist.x[i];
    budget += Rational(i) * dist.x[i];
  }
  if (mass != Rational(params.num_files))
    throw std::invalid_argument("bound_for_distribution: masses must sum to N");
  if (budget > Rational(params.memory_t) * Rational(params.num_files))
    throw std::invalid_argument("bound_for_distribution: cache budget exceeded");
  Rational total(0);
  for (int i = 0; i <= caches; ++i)
    total += dist.x[i] * profile_coefficient(profile, i);
  return total / (Rational(params.num_files) * Rational(params.antennas));
}

}  // namespace scc

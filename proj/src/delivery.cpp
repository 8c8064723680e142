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

#include "scc/delivery.hpp"

#include <algorithm>
#include <stdexcept>

namespace scc {

RoundSchedule concat_schedule(const Association& assoc, const SystemParams& params) {
  const int streams = params.antennas;
  RoundSchedule schedule(assoc.caches());
  for (int lam = 1; lam <= assoc.caches(); ++lam) {
    const auto& users = assoc.per_cache[lam - 1];
    const int m = static_cast<int>(users.size());
    if (m == 0) continue;
    if (m < streams)
      throw std::invalid_argument(
          "concat_schedule: a nonempty cache must serve at least N0 users");
    auto& tuples = schedule[lam - 1];
    tuples.resize(m);
    // m tuples of size N0, read off the N0-fold concatenation of the user list.
    for (int j = 0; j < m; ++j) {
      tuples[j].reserve(streams);
      for (int k = 0; k < streams; ++k) tuples[j].push_back(users[(j * streams + k) % m]);
    }
  }
  return schedule;
}

std::set<int> round_users(const RoundSchedule& schedule, int round) {
  std::set<int> out;
  for (const auto& tuples : schedule) {
    if (round >= 1 && round <= static_cast<int>(tuples.size()))
      out.insert(tuples[round - 1].begin(), tuples[round - 1].end());
  }
  return out;
}

Transcript deliver(const Association& assoc, const DemandVector& demand,
                   const SystemParams& params) {
  const int caches = params.num_caches;
  const int t = params.memory_t;
  const int streams = params.antennas;
  if (assoc.caches() != caches)
    throw std::invalid_argument("deliver: association has wrong cache count");
  assoc.validate(params.num_users);
  demand.validate(params, /*require_distinct=*/false);

  const RoundSchedule schedule = concat_schedule(assoc, params);

  Transcript out;
  out.total_delay = Rational(0);
  if (t >= caches) return out;  // everything is cached

  const Rational duration(BigInt(1), binomial(caches, t) * streams);
  int max_rounds = 0;
  for (const auto& tuples : schedule)
    max_rounds = std::max(max_rounds, static_cast<int>(tuples.size()));

  // next mini index per (user, storage set); starts at 1
  std::map<std::pair<int, std::uint64_t>, int> next_mini;

  const auto q_sets = subsets_of_size(caches, t + 1);
  for (int j = 1; j <= max_rounds; ++j) {
    for (std::uint64_t q : q_sets) {
      Transmission tx;
      tx.round = j;
      tx.q_set = q;
      tx.duration = duration;
      for (int lam : mask_elements(q)) {
        const auto& tuples = schedule[lam - 1];
        if (j > static_cast<int>(tuples.size())) continue;  // cache done
        PrecodedGroup group;
        group.cache = lam;
        group.users = tuples[j - 1];
        const std::uint64_t storage = q & ~element_bit(lam);
        for (int user : group.users) {
          int& mini = next_mini[{user, storage}];
          ++mini;
          SubfileId id{demand.d[user - 1], storage, mini};
          group.payload.push_back(id);
          out.delivered[{user, storage, mini}] += 1;
        }
        tx.groups.push_back(std::move(group));
      }
      if (tx.groups.empty()) continue;  // no addressed cache is active
      out.transmissions.push_back(std::move(tx));
    }
  }
  out.total_delay = duration * Rational(static_cast<long>(out.transmissions.size()));
  return out;
}

Rational closed_form_delay(const Profile& profile, const SystemParams& params) {
  const int caches = profile.caches();
  const int t = params.memory_t;
  BigInt numerator = 0;
  for (int r = 1; r <= caches - t; ++r)
    numerator += BigInt(profile.count(r)) * binomial(caches - r, t);
  return Rational(numerator, binomial(caches, t) * params.antennas);
}

bool closed_form_delay_check(const Transcript& transcript, const Profile& profile,
                             const SystemParams& params) {
  return transcript.total_delay == closed_form_delay(profile, params);
}

}  // namespace scc

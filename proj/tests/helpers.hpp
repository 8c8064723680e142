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

#include <algorithm>
#include <random>
#include <vector>

#include "scc/envelope.hpp"
#include "scc/model.hpp"

namespace scc::test {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // bias is irrelevant for test-instance generation
}

/// Random sorted profile of `users` over `caches` where every nonzero entry
/// is at least `min_nonzero`.
inline Profile random_profile(std::mt19937_64& rng, int users, int caches,
                              int min_nonzero = 1) {
  while (true) {
    const int max_active = std::min(caches, users / std::max(1, min_nonzero));
    const int active = 1 + static_cast<int>(draw(rng, max_active));
    std::vector<int> counts(caches, 0);
    for (int a = 0; a < active; ++a) counts[a] = min_nonzero;
    int rest = users - active * min_nonzero;
    if (rest < 0) continue;
    while (rest > 0) {
      counts[draw(rng, active)] += 1;
      --rest;
    }
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    return Profile(counts);
  }
}

/// Association with the given profile: sizes shuffled over caches, users
/// shuffled over slots.
inline Association random_association(std::mt19937_64& rng, const Profile& profile) {
  const int caches = profile.caches();
  const int users = profile.total_users();
  std::vector<int> sizes(profile.counts());
  for (int i = caches - 1; i > 0; --i)
    std::swap(sizes[i], sizes[draw(rng, i + 1)]);
  std::vector<int> ids(users);
  std::iota(ids.begin(), ids.end(), 1);
  for (int i = users - 1; i > 0; --i)
    std::swap(ids[i], ids[draw(rng, i + 1)]);
  Association assoc;
  assoc.per_cache.resize(caches);
  std::size_t next = 0;
  for (int lam = 0; lam < caches; ++lam)
    for (int j = 0; j < sizes[lam]; ++j) assoc.per_cache[lam].push_back(ids[next++]);
  return assoc;
}

/// Envelope oracle: best value at t over all lines through two input points
/// that lie below every input point.
inline Rational envelope_by_chords(const std::vector<EnvelopePoint>& points,
                                   const Rational& t) {
  bool found = false;
  Rational best(0);
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Rational xa(points[a].t), xb(points[b].t);
      const Rational slope = (points[b].value - points[a].value) / (xb - xa);
      const auto line_at = [&](const Rational& x) {
        return points[a].value + slope * (x - xa);
      };
      bool below_all = true;
      for (const auto& p : points)
        if (line_at(Rational(p.t)) > p.value) {
          below_all = false;
          break;
        }
      if (!below_all) continue;
      const Rational v = line_at(t);
      if (!found || v > best) {
        best = v;
        found = true;
      }
    }
  }
  return best;
}

}  // namespace scc::test

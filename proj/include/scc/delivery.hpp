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
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "scc/model.hpp"

namespace scc {

/// The per-cache slice of one transmission: an N0-tuple of users of one cache
/// served together by stream separation, the k-th payload intended for the
/// k-th user. All interference seen across groups is resolved from caches.
struct PrecodedGroup {
  int cache = 0;
  std::vector<int> users;        // N0 users of `cache`
  std::vector<SubfileId> payload;  // payload[k] intended for users[k]
};

/// One delivery slot. For a single stream each group degenerates to one
/// (user, subfile) pair and the slot carries the XOR of all group payloads.
struct Transmission {
  int round = 0;
  std::uint64_t q_set = 0;  // t+1 caches addressed by this slot
  std::vector<PrecodedGroup> groups;
  Rational duration;
};

struct Transcript {
  std::vector<Transmission> transmissions;
  Rational total_delay;
  /// (user, storage set, mini) -> number of times delivered; every entry is
  /// exactly 1 for a completed run.
  std::map<std::tuple<int, std::uint64_t, int>, int> delivered;
};

/// Per-cache service schedule: schedule[lambda-1][j-1] is the N0-tuple of
/// users cache lambda serves in round j. Cache lambda yields exactly
/// |U_lambda| tuples and each of its users appears in exactly N0 of them.
using RoundSchedule = std::vector<std::vector<std::vector<int>>>;

/// Builds the schedule from the N0-fold concatenation of each cache's user
/// vector. Throws if some cache has between 1 and N0-1 users.
RoundSchedule concat_schedule(const Association& assoc, const SystemParams& params);

/// Users served in round j: union of the j-th tuples of caches still active.
std::set<int> round_users(const RoundSchedule& schedule, int round);

/// Runs the full delivery: for each round and each (t+1)-subset of caches in
/// colex order, emits one transmission iff some addressed cache is active.
/// Mini indices are assigned sequentially per (user, storage set).
Transcript deliver(const Association& assoc, const DemandVector& demand,
                   const SystemParams& params);

/// Delay the completed transcript must show:
/// (sum over ranks r of L_r * C(Lambda-r, t)) / (C(Lambda,t) * N0).
Rational closed_form_delay(const Profile& profile, const SystemParams& params);

/// Exact equality of the measured total delay against closed_form_delay.
bool closed_form_delay_check(const Transcript& transcript, const Profile& profile,
                             const SystemParams& params);

}  // namespace scc

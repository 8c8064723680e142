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

#include <map>
#include <vector>

#include "scc/delivery.hpp"
#include "scc/placement.hpp"

namespace scc {

struct UserDecodeResult {
  bool recovered = false;
  std::vector<SubfileId> missing;        // needed mini-files never decodable
  std::vector<SubfileId> uncancellable;  // interference not found in the cache
};

struct DecodeReport {
  std::map<int, UserDecodeResult> per_user;

  bool all_recovered() const {
    for (const auto& [user, res] : per_user)
      if (!res.recovered) return false;
    return true;
  }
};

/// High-SNR verification by labels: in each transmission a user hears its own
/// group's payload interference-free plus every other group's payload list as
/// interference; the intended mini-file counts as delivered iff all of that
/// interference sits in the user's cache. A user is recovered when each of
/// its needed mini-files is delivered that way.
DecodeReport decode_symbolic(const Transcript& transcript,
                             const std::vector<CacheContents>& caches,
                             const Association& assoc, const DemandVector& demand,
                             const SystemParams& params);

/// Byte-exact verification for the single-stream case: each slot's wire bytes
/// are the XOR of its payload blocks, receivers strip the components they
/// cache, and the reassembled file must match the library byte for byte.
DecodeReport decode_xor(const Transcript& transcript,
                        const std::vector<CacheContents>& caches,
                        const Library& library, const Association& assoc,
                        const DemandVector& demand, const SystemParams& params);

}  // namespace scc

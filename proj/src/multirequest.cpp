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

#include "scc/multirequest.hpp"

#include <stdexcept>

namespace scc {

namespace {

void require_single_stream(const SystemParams& params) {
  if (params.antennas != 1)
    throw std::invalid_argument(
        "multi-request problem: defined for the single-stream case only");
}

}  // namespace

Rational mfr_delay(const Profile& request_profile, const SystemParams& params,
                   const Rational& t) {
  require_single_stream(params);
  return optimal_delay(request_profile, params, t);
}

Transcript mfr_deliver(const Association& file_assoc, const DemandVector& demand,
                       const SystemParams& params) {
  require_single_stream(params);
  return deliver(file_assoc, demand, params);
}

DecodeReport mfr_decode(const Transcript& transcript,
                        const std::vector<CacheContents>& caches,
                        const Association& file_assoc, const DemandVector& demand,
                        const SystemParams& params) {
  require_single_stream(params);
  const DecodeReport by_position =
      decode_symbolic(transcript, caches, file_assoc, demand, params);

  // Fold demand positions into their owning user (= cache id).
  DecodeReport by_owner;
  for (int lam = 1; lam <= file_assoc.caches(); ++lam) {
    auto& res = by_owner.per_user[lam];
    res.recovered = true;
    for (int pos : file_assoc.per_cache[lam - 1]) {
      const auto& part = by_position.per_user.at(pos);
      if (!part.recovered) res.recovered = false;
      res.missing.insert(res.missing.end(), part.missing.begin(), part.missing.end());
      res.uncancellable.insert(res.uncancellable.end(), part.uncancellable.begin(),
                               part.uncancellable.end());
    }
  }
  return by_owner;
}

}  // namespace scc

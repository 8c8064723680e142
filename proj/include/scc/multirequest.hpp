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

#include "scc/bounds.hpp"
#include "scc/decode.hpp"
#include "scc/delivery.hpp"

namespace scc {

// Multiple-file-request front end for the single-stream engine: Lambda users
// each own one cache and request several files. An association is read as a
// user-to-file map (entry j of cache lambda's list is the demand position of
// the j-th file requested by user lambda), which makes the shared-cache
// engine solve the problem unchanged.

/// Optimal multi-request delay; identical to optimal_delay with one stream.
/// Rejects params with more than one antenna.
Rational mfr_delay(const Profile& request_profile, const SystemParams& params,
                   const Rational& t);

/// Runs delivery on the relabeled problem. Rejects params with more than one
/// antenna.
Transcript mfr_deliver(const Association& file_assoc, const DemandVector& demand,
                       const SystemParams& params);

/// Per-owner recovery: user lambda is recovered iff every demand position in
/// its list decodes against cache lambda.
DecodeReport mfr_decode(const Transcript& transcript,
                        const std::vector<CacheContents>& caches,
                        const Association& file_assoc, const DemandVector& demand,
                        const SystemParams& params);

}  // namespace scc

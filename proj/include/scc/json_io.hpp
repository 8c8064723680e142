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

#include <json.hpp>

#include "scc/decode.hpp"
#include "scc/delivery.hpp"
#include "scc/model.hpp"

namespace scc {

// Wire formats. Rationals travel as "num/den" strings so files stay exact.
//
//   Association: {"caches": [[user, ...], ...]}
//   Demand:      {"demand": [file, ...]}
//   Transcript:  [{"round", "Q", "groups": [{"cache", "users", "subfiles"}],
//                  "duration"}, ...]
//   Subfile:     {"file", "caches", "mini"}

nlohmann::json association_to_json(const Association& assoc);
Association association_from_json(const nlohmann::json& j);

nlohmann::json demand_to_json(const DemandVector& demand);
DemandVector demand_from_json(const nlohmann::json& j);

nlohmann::json subfile_to_json(const SubfileId& id);

nlohmann::json transcript_to_json(const Transcript& transcript);

nlohmann::json decode_report_to_json(const DecodeReport& report);

}  // namespace scc

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

#include "scc/json_io.hpp"

namespace scc {

using nlohmann::json;

json association_to_json(const Association& assoc) {
  json caches = json::array();
  for (const auto& list : assoc.per_cache) caches.push_back(list);
  return json{{"caches", caches}};
}

Association association_from_json(const json& j) {
  Association assoc;
  for (const auto& list : j.at("caches"))
    assoc.per_cache.push_back(list.get<std::vector<int>>());
  return assoc;
}

json demand_to_json(const DemandVector& demand) {
  return json{{"demand", demand.d}};
}

DemandVector demand_from_json(const json& j) {
  return DemandVector{j.at("demand").get<std::vector<int>>()};
}

json subfile_to_json(const SubfileId& id) {
  return json{{"file", id.file},
              {"caches", mask_elements(id.storage_set)},
              {"mini", id.mini}};
}

json transcript_to_json(const Transcript& transcript) {
  json out = json::array();
  for (const auto& tx : transcript.transmissions) {
    json groups = json::array();
    for (const auto& g : tx.groups) {
      json subfiles = json::array();
      for (const auto& id : g.payload) subfiles.push_back(subfile_to_json(id));
      groups.push_back(
          json{{"cache", g.cache}, {"users", g.users}, {"subfiles", subfiles}});
    }
    out.push_back(json{{"round", tx.round},
                       {"Q", mask_elements(tx.q_set)},
                       {"groups", groups},
                       {"duration", tx.duration.to_string()}});
  }
  return out;
}

json decode_report_to_json(const DecodeReport& report) {
  json users = json::array();
  for (const auto& [user, res] : report.per_user) {
    json missing = json::array();
    for (const auto& id : res.missing) missing.push_back(subfile_to_json(id));
    json uncancellable = json::array();
    for (const auto& id : res.uncancellable)
      uncancellable.push_back(subfile_to_json(id));
    users.push_back(json{{"user", user},
                         {"recovered", res.recovered},
                         {"missing", missing},
                         {"uncancellable", uncancellable}});
  }
  return json{{"all_recovered", report.all_recovered()}, {"users", users}};
}

}  // namespace scc

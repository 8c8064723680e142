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

#include <string>
#include <vector>

#include "scc/bounds.hpp"

namespace scc {

/// Memory/delay CSV over integer t = 0..Lambda for each profile. Header:
/// profile,t,gamma_num,gamma_den,delay_num,delay_den
/// The profile field joins counts with '|' so the CSV stays comma-clean.
std::string sweep_csv(int users, int caches, int streams,
                      const std::vector<Profile>& profiles);

/// Converse-bound CSV sampled at t = k/denominator over [0, Lambda]. Header:
/// t_num,t_den,bound_num,bound_den
std::string converse_csv(const Profile& profile, const SystemParams& params,
                         int denominator = 1);

}  // namespace scc

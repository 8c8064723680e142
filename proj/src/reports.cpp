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

#include "scc/reports.hpp"

#include <sstream>
#include <stdexcept>

namespace scc {

std::string sweep_csv(int users, int caches, int streams,
                      const std::vector<Profile>& profiles) {
  std::ostringstream out;
  out << "profile,t,gamma_num,gamma_den,delay_num,delay_den\n";
  for (const auto& profile : profiles) {
    if (profile.caches() != caches || profile.total_users() != users)
      throw std::invalid_argument("sweep_csv: profile does not match K and Lambda");
    std::string label;
    for (int r = 1; r <= caches; ++r) {
      if (r > 1) label += '|';
      label += std::to_string(profile.count(r));
    }
    SystemParams params(users, users, caches, streams, 0);
    for (int t = 0; t <= caches; ++t) {
      const Rational gamma(t, caches);
      const Rational delay = optimal_delay(profile, params, Rational(t));
      out << label << ',' << t << ',' << gamma.num() << ',' << gamma.den() << ','
          << delay.num() << ',' << delay.den() << '\n';
    }
  }
  return out.str();
}

std::string converse_csv(const Profile& profile, const SystemParams& params,
                         int denominator) {
  if (denominator < 1) throw std::invalid_argument("converse_csv: bad denominator");
  std::ostringstream out;
  out << "t_num,t_den,bound_num,bound_den\n";
  const int caches = profile.caches();
  for (int k = 0; k <= caches * denominator; ++k) {
    const Rational t(k, denominator);
    const Rational bound = converse_bound(profile, params, t);
    out << t.num() << ',' << t.den() << ',' << bound.num() << ',' << bound.den()
        << '\n';
  }
  return out.str();
}

}  // namespace scc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "scc/multirequest.hpp"

using namespace scc;

TEST_CASE("multi-request delay equals the single-stream optimum") {
  const SystemParams params(9, 9, 3, 1, 1);
  // (4*C(2,1) + 3*C(1,1)) / C(3,1) = 11/3
  CHECK(mfr_delay(Profile({4, 3, 2}), params, Rational(1)) == Rational(11, 3));
  CHECK(mfr_delay(Profile({4, 3, 2}), params, Rational(3)) == Rational(0));

  // uniform requests: K(1-gamma)/(t+1)
  const SystemParams uniform_params(12, 12, 3, 1, 0);
  for (int t = 0; t <= 3; ++t)
    CHECK(mfr_delay(Profile::uniform(12, 3), uniform_params, Rational(t)) ==
          uniform_delay(12, 3, 1, Rational(t)));

  const SystemParams multi(9, 9, 3, 2, 1);
  CHECK_THROWS_AS(mfr_delay(Profile({4, 3, 2}), multi, Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("single request per owner reduces to the one-cache-per-user scheme") {
  // 3 users each owning a cache and requesting one file
  const Association assoc{{{1}, {2}, {3}}};
  const SystemParams params(3, 3, 3, 1, 1);
  DemandVector demand{{3, 1, 2}};
  const auto mfr = mfr_deliver(assoc, demand, params);
  const auto plain = deliver(assoc, demand, params);
  CHECK(mfr.total_delay == plain.total_delay);
  CHECK(mfr.transmissions.size() == plain.transmissions.size());
  CHECK(closed_form_delay_check(mfr, Profile({1, 1, 1}), params));
}

TEST_CASE("multi-request delivery matches the shared-cache engine") {
  std::mt19937_64 rng(113);
  for (int rep = 0; rep < 100; ++rep) {
    const int owners = 2 + static_cast<int>(rng() % 4);
    const int requests = owners + static_cast<int>(rng() % 9);
    const Profile profile = test::random_profile(rng, requests, owners);
    const int t = static_cast<int>(rng() % (owners + 1));
    const SystemParams params(requests, requests, owners, 1, t);
    const Association file_assoc = test::random_association(rng, profile);
    const auto demand = worst_case_demand(params, rng());

    const auto mfr = mfr_deliver(file_assoc, demand, params);
    const auto shared = deliver(file_assoc, demand, params);
    CHECK(mfr.total_delay == shared.total_delay);
    CHECK(mfr.total_delay == mfr_delay(profile, params, Rational(t)));

    const auto report =
        mfr_decode(mfr, place(params), file_assoc, demand, params);
    CHECK(report.per_user.size() == static_cast<std::size_t>(owners));
    CHECK(report.all_recovered());
  }
}

TEST_CASE("multi-request delivery rejects multiple streams") {
  const Association assoc{{{1, 2}, {3}}};
  const SystemParams params(3, 3, 2, 2, 1);
  DemandVector demand{{1, 2, 3}};
  CHECK_THROWS_AS(mfr_deliver(assoc, demand, params), std::invalid_argument);
}

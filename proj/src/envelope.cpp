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

#include "scc/envelope.hpp"

#include <stdexcept>

namespace scc {

namespace {

// Cross product of (a - o) x (b - o); positive means a left turn o->a->b.
Rational cross(const std::pair<Rational, Rational>& o,
               const std::pair<Rational, Rational>& a,
               const std::pair<Rational, Rational>& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

}  // namespace

ConvexEnvelope::ConvexEnvelope(const std::vector<EnvelopePoint>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("ConvexEnvelope: need at least two points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i - 1].t >= points[i].t)
      throw std::invalid_argument("ConvexEnvelope: t values must strictly increase");
  }
  // Monotone scan keeping only left turns: lower hull, slopes strictly increasing.
  for (const auto& p : points) {
    std::pair<Rational, Rational> q{Rational(p.t), p.value};
    while (hull_.size() >= 2 &&
           cross(hull_[hull_.size() - 2], hull_.back(), q) <= Rational(0)) {
      hull_.pop_back();
    }
    hull_.push_back(std::move(q));
  }
}

Rational ConvexEnvelope::eval(const Rational& t) const {
  if (t < hull_.front().first || t > hull_.back().first)
    throw std::domain_error("ConvexEnvelope::eval: t outside the envelope range");
  // Find the segment [lo, hi] containing t.
  std::size_t lo = 0, hi = hull_.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (hull_[mid].first <= t)
      lo = mid;
    else
      hi = mid;
  }
  if (t == hull_[lo].first) return hull_[lo].second;
  if (t == hull_[hi].first) return hull_[hi].second;
  const auto& a = hull_[lo];
  const auto& b = hull_[hi];
  return a.second + (b.second - a.second) * (t - a.first) / (b.first - a.first);
}

}  // namespace scc

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

#include <utility>
#include <vector>

#include "scc/rational.hpp"

namespace scc {

/// One sample of a memory/value trade-off curve at integer memory parameter t.
struct EnvelopePoint {
  long t = 0;
  Rational value;
};

/// Greatest convex function lying below a set of points, as a piecewise-linear
/// function over [min t, max t]. All arithmetic is exact.
class ConvexEnvelope {
 public:
  /// Points must have strictly increasing t; at least two are required.
  explicit ConvexEnvelope(const std::vector<EnvelopePoint>& points);

  /// Value at t. Throws std::domain_error outside [min t, max t].
  Rational eval(const Rational& t) const;

  /// Hull vertices, (t, value) with strictly increasing t and slopes.
  const std::vector<std::pair<Rational, Rational>>& hull() const { return hull_; }

 private:
  std::vector<std::pair<Rational, Rational>> hull_;
};

inline ConvexEnvelope lower_convex_envelope(const std::vector<EnvelopePoint>& points) {
  return ConvexEnvelope(points);
}

}  // namespace scc

// Copyright 2026 The sslpred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sslpred/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace sslpred {

void FieldBounds::validate() const {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw std::invalid_argument("FieldBounds: half_length must be positive");
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("FieldBounds: half_width must be positive");
  }
}

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("normalize_angle: non-finite angle");
  }
  // remainder() lands in [-pi, pi]; shift the -pi endpoint to +pi.
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) {
    r += kTwoPi;
  }
  return r;
}

double angle_between(Vec2 a, Vec2 b) {
  if (!is_finite(a) || !is_finite(b)) {
    throw std::invalid_argument("angle_between: non-finite vector");
  }
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("angle_between: zero-length vector");
  }
  const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace sslpred

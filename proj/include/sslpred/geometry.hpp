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

#ifndef SSLPRED_GEOMETRY_HPP_
#define SSLPRED_GEOMETRY_HPP_

#include <cmath>

namespace sslpred {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 2-D vector in field coordinates. Meters for positions, m/s for velocities.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
};

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Axis-aligned field rectangle centered on the origin.
struct FieldBounds {
  double half_length = 6.0;  // x half-extent, meters
  double half_width = 4.5;   // y half-extent, meters

  void validate() const;
  bool contains(Vec2 p) const {
    return std::abs(p.x) <= half_length && std::abs(p.y) <= half_width;
  }
};

/// Wraps an angle into (-pi, pi]; exactly -pi maps to +pi.
double normalize_angle(double theta);

/// Unsigned angle between two non-zero vectors, in [0, pi].
double angle_between(Vec2 a, Vec2 b);

}  // namespace sslpred

#endif  // SSLPRED_GEOMETRY_HPP_

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

#ifndef SSLPRED_ROBOT_MODEL_HPP_
#define SSLPRED_ROBOT_MODEL_HPP_

#include <optional>

#include "sslpred/geometry.hpp"

namespace sslpred {

/// Robot pose-velocity snapshot. Yaw is carried for reporting only.
struct RobotState {
  Vec2 position;  // m
  Vec2 velocity;  // m/s
  std::optional<double> yaw;  // rad, (-pi, pi]

  void validate() const;
};

/// Symmetric translational limits for the trapezoidal profile.
struct RobotKinematics {
  double v_max = 3.0;  // m/s, > 0
  double a_max = 3.0;  // m/s^2, > 0

  void validate() const;
};

/// Minimum time of a 1-D speed profile covering `distance` from v_start to
/// v_end with |dv/dt| <= a_max and speed in [0, v_max]. Trapezoidal, or
/// triangular when the cruise phase vanishes. When `distance` is too short
/// to change speed at a_max, returns the kinematic floor
/// |v_end - v_start| / a_max.
double travel_time_1d(double distance, double v_start, double v_end,
                      const RobotKinematics& kin);

/// Arrival time at `target` ending at `target_speed`, collapsing motion to
/// the chase line: v_start is the non-negative component of the robot's
/// velocity toward the target. Returns +inf when target_speed > v_max
/// (speed matching impossible there; the ball slows, so later points become
/// feasible).
double predict_robot_arrival_time(const RobotState& robot, Vec2 target,
                                  double target_speed, const RobotKinematics& kin);

}  // namespace sslpred

#endif  // SSLPRED_ROBOT_MODEL_HPP_

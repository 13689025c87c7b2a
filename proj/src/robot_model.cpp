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

#include "sslpred/robot_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sslpred {

void RobotState::validate() const {
  if (!is_finite(position) || !is_finite(velocity)) {
    throw std::invalid_argument("RobotState: non-finite component");
  }
  if (yaw && !(*yaw > -kPi && *yaw <= kPi + 1e-12)) {
    throw std::invalid_argument("RobotState: yaw outside (-pi, pi]");
  }
}

void RobotKinematics::validate() const {
  if (!(v_max > 0.0) || !std::isfinite(v_max)) {
    throw std::invalid_argument("RobotKinematics: v_max must be > 0");
  }
  if (!(a_max > 0.0) || !std::isfinite(a_max)) {
    throw std::invalid_argument("RobotKinematics: a_max must be > 0");
  }
}

double travel_time_1d(double distance, double v_start, double v_end,
                      const RobotKinematics& kin) {
  kin.validate();
  if (!(distance >= 0.0) || !std::isfinite(distance)) {
    throw std::invalid_argument("travel_time_1d: distance must be >= 0");
  }
  if (!(v_start >= 0.0) || !(v_start <= kin.v_max)) {
    throw std::invalid_argument("travel_time_1d: v_start outside [0, v_max]");
  }
  if (!(v_end >= 0.0) || !(v_end <= kin.v_max)) {
    throw std::invalid_argument("travel_time_1d: v_end outside [0, v_max]");
  }

  const double a = kin.a_max;
  // Shortest distance over which the speed can change monotonically.
  const double d_min = std::abs(v_end * v_end - v_start * v_start) / (2.0 * a);
  if (distance < d_min) {
    return std::abs(v_end - v_start) / a;
  }
  // Peak speed of the triangular profile covering exactly `distance`.
  const double v_peak =
      std::sqrt((2.0 * a * distance + v_start * v_start + v_end * v_end) / 2.0);
  if (v_peak <= kin.v_max) {
    return (2.0 * v_peak - v_start - v_end) / a;
  }
  const double t_acc = (kin.v_max - v_start) / a;
  const double t_dec = (kin.v_max - v_end) / a;
  const double d_acc = (kin.v_max * kin.v_max - v_start * v_start) / (2.0 * a);
  const double d_dec = (kin.v_max * kin.v_max - v_end * v_end) / (2.0 * a);
  return t_acc + t_dec + (distance - d_acc - d_dec) / kin.v_max;
}

double predict_robot_arrival_time(const RobotState& robot, Vec2 target,
                                  double target_speed, const RobotKinematics& kin) {
  kin.validate();
  robot.validate();
  if (!is_finite(target) || !(target_speed >= 0.0)) {
    throw std::invalid_argument("predict_robot_arrival_time: bad target");
  }
  if (target_speed > kin.v_max) {
    return std::numeric_limits<double>::infinity();
  }
  const Vec2 delta = target - robot.position;
  const double distance = delta.norm();
  double v_start = 0.0;
  if (distance > 0.0) {
    v_start = std::clamp(robot.velocity.dot(delta) / distance, 0.0, kin.v_max);
  }
  return travel_time_1d(distance, v_start, target_speed, kin);
}

}  // namespace sslpred

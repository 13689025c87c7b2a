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

#include "sslpred/ball_model.hpp"

#include <stdexcept>

namespace sslpred {

void BallState::validate() const {
  if (!is_finite(position) || !is_finite(velocity)) {
    throw std::invalid_argument("BallState: non-finite component");
  }
}

void BallMotionModel::validate() const {
  if (!(deceleration > 0.0) || !std::isfinite(deceleration)) {
    throw std::invalid_argument("BallMotionModel: deceleration must be > 0");
  }
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("ball model: prediction time must be >= 0");
  }
}

}  // namespace

Vec2 predict_ball_velocity(Vec2 v0, double t, const BallMotionModel& model) {
  model.validate();
  check_time(t);
  const double speed = v0.norm();
  if (speed == 0.0) {
    return {0.0, 0.0};
  }
  const double remaining = speed - model.deceleration * t;
  if (remaining <= 0.0) {
    return {0.0, 0.0};
  }
  return v0 * (remaining / speed);
}

Vec2 predict_ball_position(Vec2 p0, Vec2 v0, double t, const BallMotionModel& model) {
  model.validate();
  check_time(t);
  const double speed = v0.norm();
  if (speed == 0.0) {
    return p0;
  }
  const double t_stop = speed / model.deceleration;
  double s;
  if (t >= t_stop) {
    s = speed * speed / (2.0 * model.deceleration);
  } else {
    s = speed * t - 0.5 * model.deceleration * t * t;
  }
  return p0 + v0 * (s / speed);
}

double stop_time(Vec2 v0, const BallMotionModel& model) {
  model.validate();
  return v0.norm() / model.deceleration;
}

Vec2 stop_position(Vec2 p0, Vec2 v0, const BallMotionModel& model) {
  model.validate();
  return predict_ball_position(p0, v0, stop_time(v0, model), model);
}

}  // namespace sslpred

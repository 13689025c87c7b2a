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

#ifndef SSLPRED_BALL_MODEL_HPP_
#define SSLPRED_BALL_MODEL_HPP_

#include "sslpred/geometry.hpp"

namespace sslpred {

/// Ball kinematic state at a reference instant.
struct BallState {
  Vec2 position;  // m
  Vec2 velocity;  // m/s

  void validate() const;
};

/// Straight-line rolling ball with constant deceleration until rest.
struct BallMotionModel {
  double deceleration = 0.5;  // m/s^2, > 0

  void validate() const;
};

/// Velocity after coasting for t seconds; exactly zero once stopped.
Vec2 predict_ball_velocity(Vec2 v0, double t, const BallMotionModel& model);

/// Position after coasting for t seconds; clamped at the stop position.
Vec2 predict_ball_position(Vec2 p0, Vec2 v0, double t, const BallMotionModel& model);

/// Seconds until the ball is at rest: |v0| / deceleration.
double stop_time(Vec2 v0, const BallMotionModel& model);

/// Final resting position of the ball.
Vec2 stop_position(Vec2 p0, Vec2 v0, const BallMotionModel& model);

}  // namespace sslpred

#endif  // SSLPRED_BALL_MODEL_HPP_

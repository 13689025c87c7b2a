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

#ifndef SSLPRED_PURSUIT_HPP_
#define SSLPRED_PURSUIT_HPP_

#include <cstddef>
#include <vector>

#include "sslpred/ball_model.hpp"
#include "sslpred/geometry.hpp"
#include "sslpred/robot_model.hpp"

namespace sslpred {

/// Parameters of the pursuit search and its detour cost.
struct PursuitConfig {
  double dt = 0.01;       // s, trajectory sampling step, > 0
  double t_thres = 0.02;  // s, convergence band half-width, > 0
  double omega1 = 3.0;    // s, detour cost magnitude, >= 0
  double omega2 = 5.0;    // m, detour cost range scale, > 0
  FieldBounds field;
  BallMotionModel ball_model;
  RobotKinematics kin;

  void validate() const;
};

enum class Termination {
  kConverged,    // arrival time matched the sample time within the band
  kBallStopped,  // search ran past the ball's rest time
  kOutOfField,   // trajectory left the field; last in-field sample returned
};

const char* to_string(Termination t);

/// Outcome of the pursuit search: the chase point and the predicted time to
/// gain control there. The time always includes the detour term, whatever
/// the termination mode.
struct PursuitResult {
  Vec2 point;
  double time = 0.0;  // s, may be +inf if speed matching never feasible
  Termination termination = Termination::kConverged;
};

/// Time penalty for maneuvering around a ball encountered head-on:
/// omega1 * exp(-r / omega2) * (1 - cos theta), with r the robot-ball
/// distance and theta in [0, pi] the angle between the robot->ball bearing
/// and the ball velocity (0 = robot directly behind the motion).
double detour_cost(double r, double theta, double omega1, double omega2);

/// Searches along the predicted ball trajectory for the earliest point the
/// robot can reach at the moment the ball does, arriving at the ball's
/// speed. Samples t_k = k*dt; converges at the first k where
/// |T_k - t_k| <= t_thres or T_k <= t_k (the robot can arrive early and
/// wait). Falls back to the stop position once the ball rests, or to the
/// last in-field sample if the trajectory leaves the field. The detour term
/// is evaluated once from the initial geometry and added to every T_k.
PursuitResult predict_pursuit(const BallState& ball, const RobotState& robot,
                              const PursuitConfig& cfg);

/// Regular grid of robot start positions for heatmap evaluation.
struct GridSpec {
  Vec2 origin;             // position of cell (ix=0, iy=0)
  double cell_size = 0.2;  // m, > 0
  std::size_t nx = 1;
  std::size_t ny = 1;

  void validate() const;
  Vec2 cell_center(std::size_t ix, std::size_t iy) const {
    return {origin.x + static_cast<double>(ix) * cell_size,
            origin.y + static_cast<double>(iy) * cell_size};
  }
};

/// Field of predicted pursuit times, row-major: values[iy * nx + ix].
struct HeatmapGrid {
  Vec2 origin;
  double cell_size = 0.2;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> values;  // seconds, +inf allowed

  double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
};

/// Evaluates predict_pursuit for a resting robot at every cell center.
/// Cells are independent work items; the output is identical for any
/// `threads` value (0 = hardware concurrency).
HeatmapGrid pursuit_heatmap(const BallState& ball, const GridSpec& grid,
                            const PursuitConfig& cfg, unsigned threads = 0);

}  // namespace sslpred

#endif  // SSLPRED_PURSUIT_HPP_

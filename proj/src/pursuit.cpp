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

#include "sslpred/pursuit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

namespace sslpred {

void PursuitConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("PursuitConfig: dt must be > 0");
  }
  if (!(t_thres > 0.0) || !std::isfinite(t_thres)) {
    throw std::invalid_argument("PursuitConfig: t_thres must be > 0");
  }
  if (!(omega1 >= 0.0) || !std::isfinite(omega1)) {
    throw std::invalid_argument("PursuitConfig: omega1 must be >= 0");
  }
  if (!(omega2 > 0.0) || !std::isfinite(omega2)) {
    throw std::invalid_argument("PursuitConfig: omega2 must be > 0");
  }
  field.validate();
  ball_model.validate();
  kin.validate();
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::kConverged:
      return "Converged";
    case Termination::kBallStopped:
      return "BallStopped";
    case Termination::kOutOfField:
      return "OutOfField";
  }
  return "Unknown";
}

double detour_cost(double r, double theta, double omega1, double omega2) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("detour_cost: r must be >= 0");
  }
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("detour_cost: theta must be in [0, pi]");
  }
  if (!(omega1 >= 0.0) || !(omega2 > 0.0)) {
    throw std::invalid_argument("detour_cost: bad omega constants");
  }
  return omega1 * std::exp(-r / omega2) * (1.0 - std::cos(theta));
}

namespace {

// Detour penalty of the initial encounter geometry; zero for a resting ball
// or a robot already on the ball.
double initial_detour(const BallState& ball, const RobotState& robot,
                      const PursuitConfig& cfg) {
  const Vec2 to_ball = ball.position - robot.position;
  const double r = to_ball.norm();
  if (r == 0.0 || ball.velocity.norm() == 0.0) {
    return 0.0;
  }
  const double theta = angle_between(to_ball, ball.velocity);
  return detour_cost(r, theta, cfg.omega1, cfg.omega2);
}

}  // namespace

PursuitResult predict_pursuit(const BallState& ball, const RobotState& robot,
                              const PursuitConfig& cfg) {
  cfg.validate();
  ball.validate();
  robot.validate();

  const double cost = initial_detour(ball, robot, cfg);
  const double t_stop = stop_time(ball.velocity, cfg.ball_model);

  std::optional<PursuitResult> last_in_field;
  for (std::size_t k = 0;; ++k) {
    const double t_k = static_cast<double>(k) * cfg.dt;
    if (t_k > t_stop) {
      const Vec2 rest = stop_position(ball.position, ball.velocity, cfg.ball_model);
      const double time = predict_robot_arrival_time(robot, rest, 0.0, cfg.kin) + cost;
      return {rest, time, Termination::kBallStopped};
    }
    const Vec2 p_k = predict_ball_position(ball.position, ball.velocity, t_k, cfg.ball_model);
    const Vec2 v_k = predict_ball_velocity(ball.velocity, t_k, cfg.ball_model);
    const double t_arrive =
        predict_robot_arrival_time(robot, p_k, v_k.norm(), cfg.kin) + cost;
    if (!cfg.field.contains(p_k)) {
      if (last_in_field) {
        return *last_in_field;
      }
      // Ball already outside at t=0; report the first sample anyway.
      return {p_k, t_arrive, Termination::kOutOfField};
    }
    if (std::abs(t_arrive - t_k) <= cfg.t_thres || t_arrive <= t_k) {
      return {p_k, t_arrive, Termination::kConverged};
    }
    last_in_field = PursuitResult{p_k, t_arrive, Termination::kOutOfField};
  }
}

void GridSpec::validate() const {
  if (!is_finite(origin)) {
    throw std::invalid_argument("GridSpec: non-finite origin");
  }
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw std::invalid_argument("GridSpec: cell_size must be > 0");
  }
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("GridSpec: grid dimensions must be >= 1");
  }
}

HeatmapGrid pursuit_heatmap(const BallState& ball, const GridSpec& grid,
                            const PursuitConfig& cfg, unsigned threads) {
  cfg.validate();
  ball.validate();
  grid.validate();

  HeatmapGrid out;
  out.origin = grid.origin;
  out.cell_size = grid.cell_size;
  out.nx = grid.nx;
  out.ny = grid.ny;
  out.values.assign(grid.nx * grid.ny, 0.0);

  const auto eval_rows = [&](std::size_t iy_begin, std::size_t iy_end) {
    for (std::size_t iy = iy_begin; iy < iy_end; ++iy) {
      for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        RobotState robot{grid.cell_center(ix, iy), {0.0, 0.0}, {}};
        out.values[iy * grid.nx + ix] = predict_pursuit(ball, robot, cfg).time;
      }
    }
  };

  unsigned n = threads == 0 ? std::thread::hardware_concurrency() : threads;
  n = std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(grid.ny)));
  if (n == 1) {
    eval_rows(0, grid.ny);
    return out;
  }
  // Disjoint row ranges; each cell depends only on its own inputs, so the
  // result does not depend on the partitioning.
  std::vector<std::thread> pool;
  pool.reserve(n);
  const std::size_t chunk = (grid.ny + n - 1) / n;
  for (unsigned i = 0; i < n; ++i) {
    const std::size_t lo = std::min<std::size_t>(i * chunk, grid.ny);
    const std::size_t hi = std::min<std::size_t>(lo + chunk, grid.ny);
    if (lo < hi) {
      pool.emplace_back(eval_rows, lo, hi);
    }
  }
  for (auto& th : pool) {
    th.join();
  }
  return out;
}

}  // namespace sslpred

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

#include "sslpred/possession.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sslpred {

void TeamSnapshot::validate() const {
  kin.validate();
  std::set<int> ids;
  bool any_field_player = false;
  for (const auto& r : robots) {
    r.state.validate();
    if (!ids.insert(r.id).second) {
      throw std::invalid_argument("TeamSnapshot: duplicate robot id");
    }
    any_field_player = any_field_player || !r.is_goalie;
  }
  if (!any_field_player) {
    throw std::invalid_argument("TeamSnapshot: no non-goalie robot");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kOurs:
      return "Ours";
    case Verdict::kTheirs:
      return "Theirs";
    case Verdict::kContested:
      return "Contested";
  }
  return "Unknown";
}

double interception_time(const RobotState& robot, const BallState& ball,
                         const RobotKinematics& kin, const PursuitConfig& cfg) {
  cfg.validate();
  kin.validate();
  robot.validate();
  ball.validate();

  const double t_stop = stop_time(ball.velocity, cfg.ball_model);
  for (std::size_t k = 0;; ++k) {
    const double t_k = static_cast<double>(k) * cfg.dt;
    if (t_k > t_stop) {
      return std::numeric_limits<double>::infinity();
    }
    const Vec2 p_k = predict_ball_position(ball.position, ball.velocity, t_k, cfg.ball_model);
    if (!cfg.field.contains(p_k)) {
      return std::numeric_limits<double>::infinity();
    }
    const Vec2 delta = p_k - robot.position;
    const double d = delta.norm();
    double v_start = 0.0;
    if (d > 0.0) {
      v_start = std::clamp(robot.velocity.dot(delta) / d, 0.0, kin.v_max);
    }
    if (travel_time_1d(d, v_start, 0.0, kin) <= t_k) {
      return t_k;
    }
  }
}

double gain_time(const RobotState& robot, const BallState& ball,
                 const RobotKinematics& kin, const PursuitConfig& cfg) {
  PursuitConfig local = cfg;
  local.kin = kin;
  const double pursue = predict_pursuit(ball, robot, local).time;
  return std::min(interception_time(robot, ball, kin, cfg), pursue);
}

namespace {

struct Best {
  int id = -1;
  double time = std::numeric_limits<double>::infinity();
};

Best best_of(const TeamSnapshot& team, const BallState& ball, const PursuitConfig& cfg) {
  Best best;
  for (const auto& r : team.robots) {
    if (r.is_goalie) {
      continue;
    }
    const double t = gain_time(r.state, ball, team.kin, cfg);
    if (t < best.time || (t == best.time && (best.id < 0 || r.id < best.id))) {
      best = {r.id, t};
    }
  }
  return best;
}

}  // namespace

PossessionReport predict_possession(const TeamSnapshot& ours, const TeamSnapshot& theirs,
                                    const BallState& ball, const PursuitConfig& cfg,
                                    double opponent_factor, double tie_epsilon) {
  cfg.validate();
  ours.validate();
  theirs.validate();
  ball.validate();
  if (!(opponent_factor > 0.0) || !std::isfinite(opponent_factor)) {
    throw std::invalid_argument("predict_possession: opponent_factor must be > 0");
  }
  if (!(tie_epsilon >= 0.0)) {
    throw std::invalid_argument("predict_possession: tie_epsilon must be >= 0");
  }

  const Best our_best = best_of(ours, ball, cfg);
  Best their_best = best_of(theirs, ball, cfg);
  their_best.time *= opponent_factor;

  PossessionReport report;
  report.our_best_id = our_best.id;
  report.our_best_time = our_best.time;
  report.their_best_id = their_best.id;
  report.their_best_time = their_best.time;
  if (std::isinf(our_best.time) && std::isinf(their_best.time)) {
    report.margin = 0.0;  // neither side can ever gain the ball
  } else {
    report.margin = their_best.time - our_best.time;
  }
  if (report.margin > tie_epsilon) {
    report.verdict = Verdict::kOurs;
  } else if (report.margin < -tie_epsilon) {
    report.verdict = Verdict::kTheirs;
  } else {
    report.verdict = Verdict::kContested;
  }
  return report;
}

std::string report_to_json(const PossessionReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(report.verdict);
  j["our_best_id"] = report.our_best_id;
  j["our_best_time_s"] = report.our_best_time;
  j["their_best_id"] = report.their_best_id;
  j["their_best_time_s"] = report.their_best_time;
  j["margin_s"] = report.margin;
  return j.dump();
}

}  // namespace sslpred

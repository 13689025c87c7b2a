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

#ifndef SSLPRED_POSSESSION_HPP_
#define SSLPRED_POSSESSION_HPP_

#include <string>
#include <vector>

#include "sslpred/pursuit.hpp"

namespace sslpred {

struct TeamRobot {
  int id = 0;
  RobotState state;
  bool is_goalie = false;
};

/// One team's robots plus their shared motion limits.
struct TeamSnapshot {
  std::vector<TeamRobot> robots;
  RobotKinematics kin;

  void validate() const;  // unique ids, >= 1 non-goalie robot
};

enum class Verdict { kOurs, kTheirs, kContested };

const char* to_string(Verdict v);

struct PossessionReport {
  Verdict verdict = Verdict::kContested;
  int our_best_id = -1;
  double our_best_time = 0.0;    // s
  int their_best_id = -1;
  double their_best_time = 0.0;  // s, opponent_factor applied
  double margin = 0.0;           // s, their_best_time - our_best_time
};

/// Earliest trajectory sample time t_k the robot can reach no later than the
/// ball (terminal speed 0), scanning only samples before the ball stops or
/// leaves the field; +inf when none qualifies.
double interception_time(const RobotState& robot, const BallState& ball,
                         const RobotKinematics& kin, const PursuitConfig& cfg);

/// min(interception_time, pursuit time) — the faster of the two ways to
/// gain the ball.
double gain_time(const RobotState& robot, const BallState& ball,
                 const RobotKinematics& kin, const PursuitConfig& cfg);

/// Compares the best (minimum) gain time of each team's non-goalie robots.
/// Opponent times are scaled by opponent_factor before comparison. Verdicts
/// within tie_epsilon of equality report Contested.
PossessionReport predict_possession(const TeamSnapshot& ours, const TeamSnapshot& theirs,
                                    const BallState& ball, const PursuitConfig& cfg,
                                    double opponent_factor = 1.0,
                                    double tie_epsilon = 0.05);

/// Single JSON object with fields: verdict, our_best_id, our_best_time_s,
/// their_best_id, their_best_time_s, margin_s.
std::string report_to_json(const PossessionReport& report);

}  // namespace sslpred

#endif  // SSLPRED_POSSESSION_HPP_

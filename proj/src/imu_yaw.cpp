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

#include "sslpred/imu_yaw.hpp"

#include "sslpred/geometry.hpp"

namespace sslpred {

YawOffset yaw_offset(double theta_c_imu, double theta_c_ssl) {
  return {normalize_angle(theta_c_imu - theta_c_ssl)};
}

double to_imu_frame(double theta_t_ssl, YawOffset offset) {
  return normalize_angle(theta_t_ssl + offset.delta_theta);
}

double to_ssl_frame(double theta_imu, YawOffset offset) {
  return normalize_angle(theta_imu - offset.delta_theta);
}

}  // namespace sslpred

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

#ifndef SSLPRED_IMU_YAW_HPP_
#define SSLPRED_IMU_YAW_HPP_

namespace sslpred {

/// Constant yaw rotation between the IMU frame and the vision (SSL) frame.
struct YawOffset {
  double delta_theta = 0.0;  // rad, (-pi, pi]
};

/// Offset from simultaneous headings of the same robot in both frames.
YawOffset yaw_offset(double theta_c_imu, double theta_c_ssl);

/// Converts a vision-frame target heading into the IMU frame.
double to_imu_frame(double theta_t_ssl, YawOffset offset);

/// Converts an IMU-frame heading back into the vision frame.
double to_ssl_frame(double theta_imu, YawOffset offset);

}  // namespace sslpred

#endif  // SSLPRED_IMU_YAW_HPP_

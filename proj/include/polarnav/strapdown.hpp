/*
 * Copyright (c) 2026, polarnav contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "polarnav/attitude.hpp"
#include "polarnav/geodesy.hpp"

namespace polarnav {

/// Two gyro and two accelerometer increments spanning one navigation
/// interval of length `interval`; each sub-sample covers interval / 2.
struct ImuIncrements {
  Vec3 dtheta1 = Vec3::Zero();  // rad
  Vec3 dtheta2 = Vec3::Zero();
  Vec3 dv1 = Vec3::Zero();      // m/s
  Vec3 dv2 = Vec3::Zero();
  double interval = 0.0;        // s
};

struct EarthFrameState {
  Quaternion q_be;            // C_b^e
  Vec3 velocity = Vec3::Zero();  // v^e
  EcefPosition position;      // p^e
  double time = 0.0;
};

struct LocalLevelState {
  Quaternion q_bn;               // C_b^n
  Vec3 velocity = Vec3::Zero();  // v^n, North-Up-East
  CurvilinearPosition position;
  double time = 0.0;
};

RotationVector coning_correction(const Vec3& dtheta1, const Vec3& dtheta2);

Vec3 sculling_velocity(const Vec3& dtheta1, const Vec3& dtheta2, const Vec3& dv1,
                       const Vec3& dv2);

/// One two-sample update of attitude, velocity and position in the ECEF
/// frame. No vertical reset is applied here.
EarthFrameState earth_frame_step(const EarthFrameState& s, const ImuIncrements& inc,
                                 const EarthModel& m);

/// One two-sample update in the North-Up-East frame.
/// Throws SingularLatitude if either the starting or the updated latitude
/// is within kSingularCosTolerance of a pole (or beyond it).
LocalLevelState local_level_step(const LocalLevelState& s, const ImuIncrements& inc,
                                 const EarthModel& m);

/// Removes the local vertical velocity component, leaving position and
/// attitude untouched.
EarthFrameState vertical_reset_earth(const EarthFrameState& s, const EarthModel& m);
LocalLevelState vertical_reset_llf(const LocalLevelState& s);

/// Continuous-time derivatives of the ECEF navigation equations.
struct EarthFrameRates {
  Vec3 body_rate_wrt_earth = Vec3::Zero();  // omega_eb^b; q_dot = q * [0, w/2]
  Vec3 velocity_dot = Vec3::Zero();
  Vec3 position_dot = Vec3::Zero();
};

EarthFrameRates continuous_rhs(const EarthFrameState& s, const Vec3& specific_force,
                               const Vec3& angular_rate, const EarthModel& m);

/// Classical RK4 step of the continuous equations. The attitude is carried
/// as a quaternion and renormalized. `specific_force(t)` and
/// `angular_rate(t)` are body-frame sensor functions.
template <typename ForceFn, typename RateFn>
EarthFrameState rk4_step(const EarthFrameState& s, double h, ForceFn&& specific_force,
                         RateFn&& angular_rate, const EarthModel& m);

// Conversions between the two state representations (same physical state).
EarthFrameState to_earth_frame(const LocalLevelState& s, const EarthModel& m);
LocalLevelState to_local_level(const EarthFrameState& s, const EarthModel& m);

}  // namespace polarnav

#include "polarnav/detail/rk4.hpp"

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

#include <string>

#include "polarnav/attitude.hpp"
#include "polarnav/geodesy.hpp"
#include "polarnav/strapdown.hpp"

namespace polarnav {

enum class PathKind {
  kMeridian,  // great circle through both poles, constant longitude
  kParallel,  // constant latitude (a continuous turn, used for alignment)
};

/// Analytic flight description. The vehicle keeps constant height and
/// speed, and its body axes stay aligned with the ECEF axes.
struct ScenarioConfig {
  std::string name = "scenario";
  PathKind path_kind = PathKind::kMeridian;
  double lon0_deg = 0.0;
  double lat0_deg = 0.0;
  double h0 = 0.0;         // m
  double speed = 0.0;      // m/s; positive = north (meridian) or east (parallel)
  double duration = 0.0;   // s
  double imu_rate = 100.0; // Hz; two IMU samples per navigation update
  double gnss_rate = 1.0;  // Hz
  EarthModel earth;

  double lon0() const { return lon0_deg * kDegToRad; }
  double lat0() const { return lat0_deg * kDegToRad; }
  double nav_interval() const { return 2.0 / imu_rate; }
  long nav_steps() const;

  /// Throws ConfigError for inconsistent settings.
  void validate() const;
};

/// Southward 1 h meridian flight from (120 E, 50 N, 10 km) at 2 km/s.
ScenarioConfig builtin_scenario_south();
/// Northward 1.5 h meridian flight over the north pole, same start.
ScenarioConfig builtin_scenario_north();

struct TruthSample {
  double t = 0.0;
  CurvilinearPosition curvilinear;
  EcefPosition ecef;
  Vec3 velocity = Vec3::Zero();      // v^e
  Vec3 acceleration = Vec3::Zero();  // dv^e/dt
  Dcm c_be = Dcm::Identity();
};

/// Throws DomainError for t outside [0, duration].
TruthSample truth_at(double t, const ScenarioConfig& cfg);

/// Body-frame specific force and inertial angular rate along the truth.
Vec3 specific_force_at(double t, const ScenarioConfig& cfg);
Vec3 angular_rate_at(double t, const ScenarioConfig& cfg);

struct SensorIncrement {
  Vec3 dtheta = Vec3::Zero();
  Vec3 dv = Vec3::Zero();
};

/// Integrated gyro and accelerometer outputs over [t_a, t_b]
/// (five-point Gauss-Legendre on the analytic specific force).
SensorIncrement imu_increments_at(double t_a, double t_b, const ScenarioConfig& cfg);

/// The two sub-sample increments covering navigation interval k.
ImuIncrements nav_increments(long k, const ScenarioConfig& cfg);

struct GnssSample {
  EcefPosition position;
  Vec3 velocity = Vec3::Zero();
};

/// Error-free GNSS fix: exactly the truth position and velocity.
GnssSample gnss_sample_at(double t, const ScenarioConfig& cfg);

/// Exact initial states for both mechanizations.
EarthFrameState initial_earth_state(const ScenarioConfig& cfg);
LocalLevelState initial_local_level_state(const ScenarioConfig& cfg);

}  // namespace polarnav

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

#include <Eigen/Dense>

namespace polarnav {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

/// Below this |cos L| the local-level curvature and transport-rate formulas
/// are refused (about 6 m from the pole on the default sphere).
inline constexpr double kSingularCosTolerance = 1e-6;

/// Earth model. Defaults describe the sphere used by the polar scenarios;
/// set eccentricity_sq to get an ellipsoid with distinct R_E / R_N.
struct EarthModel {
  double equatorial_radius = 6378137.0;  // m
  double eccentricity_sq = 0.0;
  double rotation_rate = 7.292115e-5;   // rad/s
  double gravity_magnitude = 9.80665;   // m/s^2

  /// Throws DomainError when a field violates its range.
  void validate() const;

  Vec3 rotation_vector() const { return {0.0, 0.0, rotation_rate}; }
};

/// Longitude / latitude in radians, height in metres.
struct CurvilinearPosition {
  double longitude = 0.0;
  double latitude = 0.0;
  double height = 0.0;
};

/// Earth-centred Earth-fixed Cartesian position (m).
struct EcefPosition {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 vec() const { return {x, y, z}; }
  static EcefPosition from(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
};

/// Wraps an angle into (-pi, pi].
double wrap_longitude(double lon);

EcefPosition curvilinear_to_ecef(const CurvilinearPosition& p, const EarthModel& m);

/// Inverse of curvilinear_to_ecef. Closed form on the sphere, fixed-point
/// iteration on the ellipsoid. Longitude is 0 on the polar axis.
CurvilinearPosition ecef_to_curvilinear(const EcefPosition& p, const EarthModel& m);

/// Constant-magnitude radial gravity, -g0 * p/|p|.
Vec3 gravity_ecef(const EcefPosition& p, const EarthModel& m);

struct RadiiOfCurvature {
  double transverse;  // R_E
  double meridian;    // R_N
};

RadiiOfCurvature radii_of_curvature(double latitude, const EarthModel& m);

/// Maps N-U-E velocity to (longitude, latitude, height) rates.
/// Throws SingularLatitude when |cos L| < kSingularCosTolerance.
Mat3 curvature_matrix(double latitude, double height, const EarthModel& m);

/// omega_en^n in N-U-E. Throws SingularLatitude like curvature_matrix.
Vec3 transport_rate(const Vec3& v_nue, double latitude, double height, const EarthModel& m);

/// omega_ie^n in N-U-E.
Vec3 earth_rotation_rate_nue(double latitude, const EarthModel& m);

/// C_e^n: rows are the North, Up and East unit vectors in ECEF.
Mat3 ecef_to_nue_dcm(double longitude, double latitude);

}  // namespace polarnav

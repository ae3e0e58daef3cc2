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

#include "polarnav/geodesy.hpp"

namespace polarnav {

using Dcm = Mat3;
using RotationVector = Vec3;

/// Unit attitude quaternion, Hamilton convention, scalar first: q = [s, eta].
/// Every constructor and product renormalizes.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(double s, const Vec3& eta);
  Quaternion(double s, double x, double y, double z) : Quaternion(s, Vec3{x, y, z}) {}

  static Quaternion identity() { return {}; }

  double scalar() const { return s_; }
  const Vec3& vector() const { return eta_; }
  double norm() const;

  Quaternion conjugate() const;

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);

 private:
  struct Raw {};
  Quaternion(Raw, double s, const Vec3& eta) : s_(s), eta_(eta) {}

  double s_ = 1.0;
  Vec3 eta_ = Vec3::Zero();
};

Quaternion quat_multiply(const Quaternion& a, const Quaternion& b);
Quaternion quat_conjugate(const Quaternion& q);

/// C = (s^2 - eta.eta) I + 2 eta eta^T + 2 s [eta x].
Dcm quat_to_dcm(const Quaternion& q);

/// Inverse of quat_to_dcm (Shepperd's method); the result has s >= 0.
Quaternion dcm_to_quat(const Dcm& c);

/// q = cos(|sigma|/2) + sigma/|sigma| sin(|sigma|/2), with a Taylor branch
/// below kSmallAngle.
Quaternion rotvec_to_quat(const RotationVector& sigma);

/// Rotation angle of a quaternion, in [0, pi].
double rotation_angle(const Quaternion& q);

/// Rotation angle of a DCM, in [0, pi].
double rotation_angle(const Dcm& c);

Dcm dcm_transpose(const Dcm& c);
Dcm dcm_multiply(const Dcm& a, const Dcm& b);

/// Skew-symmetric cross-product matrix: skew(a) * b == a.cross(b).
Mat3 skew(const Vec3& a);

/// C_{e(t)}^{e(0)} for t = dt: z-rotation by rotation_rate * dt taking
/// e(t) coordinates into the inertially frozen e(0) frame.
Dcm earth_frame_rotation(double dt, const EarthModel& m);

inline constexpr double kSmallAngle = 1e-8;

}  // namespace polarnav

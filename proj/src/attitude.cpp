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

#include "polarnav/attitude.hpp"

#include <algorithm>
#include <cmath>

namespace polarnav {

Quaternion::Quaternion(double s, const Vec3& eta) : s_(s), eta_(eta) {
  const double n = norm();
  if (n > 0.0) {
    s_ /= n;
    eta_ /= n;
  } else {
    s_ = 1.0;
    eta_.setZero();
  }
}

double Quaternion::norm() const { return std::sqrt(s_ * s_ + eta_.squaredNorm()); }

Quaternion Quaternion::conjugate() const { return {Raw{}, s_, -eta_}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.s_ * b.s_ - a.eta_.dot(b.eta_),
          a.s_ * b.eta_ + b.s_ * a.eta_ + a.eta_.cross(b.eta_)};
}

Quaternion quat_multiply(const Quaternion& a, const Quaternion& b) { return a * b; }

Quaternion quat_conjugate(const Quaternion& q) { return q.conjugate(); }

Dcm quat_to_dcm(const Quaternion& q) {
  const double s = q.scalar();
  const Vec3& eta = q.vector();
  return (s * s - eta.squaredNorm()) * Mat3::Identity() + 2.0 * eta * eta.transpose() +
         2.0 * s * skew(eta);
}

Quaternion dcm_to_quat(const Dcm& c) {
  const double tr = c.trace();
  const double d0 = 1.0 + tr;
  const double d1 = 1.0 + c(0, 0) - c(1, 1) - c(2, 2);
  const double d2 = 1.0 - c(0, 0) + c(1, 1) - c(2, 2);
  const double d3 = 1.0 - c(0, 0) - c(1, 1) + c(2, 2);
  const double best = std::max({d0, d1, d2, d3});

  double s, x, y, z;
  if (best == d0) {
    s = 0.5 * std::sqrt(d0);
    const double k = 0.25 / s;
    x = (c(2, 1) - c(1, 2)) * k;
    y = (c(0, 2) - c(2, 0)) * k;
    z = (c(1, 0) - c(0, 1)) * k;
  } else if (best == d1) {
    x = 0.5 * std::sqrt(d1);
    const double k = 0.25 / x;
    s = (c(2, 1) - c(1, 2)) * k;
    y = (c(0, 1) + c(1, 0)) * k;
    z = (c(0, 2) + c(2, 0)) * k;
  } else if (best == d2) {
    y = 0.5 * std::sqrt(d2);
    const double k = 0.25 / y;
    s = (c(0, 2) - c(2, 0)) * k;
    x = (c(0, 1) + c(1, 0)) * k;
    z = (c(1, 2) + c(2, 1)) * k;
  } else {
    z = 0.5 * std::sqrt(d3);
    const double k = 0.25 / z;
    s = (c(1, 0) - c(0, 1)) * k;
    x = (c(0, 2) + c(2, 0)) * k;
    y = (c(1, 2) + c(2, 1)) * k;
  }
  if (s < 0.0) {
    s = -s;
    x = -x;
    y = -y;
    z = -z;
  }
  return {s, x, y, z};
}

Quaternion rotvec_to_quat(const RotationVector& sigma) {
  const double angle = sigma.norm();
  if (angle < kSmallAngle) {
    // sin(a/2)/a and cos(a/2) to fourth order.
    const double a2 = angle * angle;
    const double half_sinc = 0.5 - a2 / 48.0 + a2 * a2 / 3840.0;
    const double c = 1.0 - a2 / 8.0 + a2 * a2 / 384.0;
    return {c, half_sinc * sigma};
  }
  const double half = 0.5 * angle;
  return {std::cos(half), (std::sin(half) / angle) * sigma};
}

double rotation_angle(const Quaternion& q) {
  return 2.0 * std::atan2(q.vector().norm(), std::abs(q.scalar()));
}

double rotation_angle(const Dcm& c) { return rotation_angle(dcm_to_quat(c)); }

Dcm dcm_transpose(const Dcm& c) { return c.transpose(); }

Dcm dcm_multiply(const Dcm& a, const Dcm& b) { return a * b; }

Mat3 skew(const Vec3& a) {
  Mat3 m;
  m << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
       -a.y(), a.x(), 0.0;
  return m;
}

Dcm earth_frame_rotation(double dt, const EarthModel& m) {
  const double angle = m.rotation_rate * dt;
  const double c = std::cos(angle), s = std::sin(angle);
  Dcm r;
  r << c, -s, 0.0,
       s,  c, 0.0,
       0.0, 0.0, 1.0;
  return r;
}

}  // namespace polarnav

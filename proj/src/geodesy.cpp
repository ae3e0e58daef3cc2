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

#include "polarnav/geodesy.hpp"

#include <cmath>
#include <sstream>

#include "polarnav/errors.hpp"

namespace polarnav {

SingularLatitude::SingularLatitude(double latitude_rad)
    : std::runtime_error([latitude_rad] {
        std::ostringstream os;
        os.precision(12);
        os << "singular latitude " << latitude_rad * kRadToDeg << " deg";
        return os.str();
      }()),
      latitude_(latitude_rad) {}

void EarthModel::validate() const {
  if (!(equatorial_radius > 0.0) || !std::isfinite(equatorial_radius))
    throw DomainError("equatorial_radius must be positive");
  if (!(eccentricity_sq >= 0.0 && eccentricity_sq < 1.0))
    throw DomainError("eccentricity_sq must lie in [0, 1)");
  if (!(rotation_rate >= 0.0) || !std::isfinite(rotation_rate))
    throw DomainError("rotation_rate must be non-negative");
  if (!(gravity_magnitude > 0.0) || !std::isfinite(gravity_magnitude))
    throw DomainError("gravity_magnitude must be positive");
}

double wrap_longitude(double lon) {
  double w = std::remainder(lon, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

EcefPosition curvilinear_to_ecef(const CurvilinearPosition& p, const EarthModel& m) {
  if (m.eccentricity_sq == 0.0) {
    // Extended precision so each coordinate carries a single rounding.
    using ld = long double;
    const ld r = static_cast<ld>(m.equatorial_radius) + static_cast<ld>(p.height);
    const ld lat = p.latitude, lon = p.longitude;
    const ld horizontal = r * std::cos(lat);
    return {static_cast<double>(horizontal * std::cos(lon)),
            static_cast<double>(horizontal * std::sin(lon)), static_cast<double>(r * std::sin(lat))};
  }
  const double sin_lat = std::sin(p.latitude);
  const double cos_lat = std::cos(p.latitude);
  const double re = radii_of_curvature(p.latitude, m).transverse;
  const double horizontal = (re + p.height) * cos_lat;
  return {horizontal * std::cos(p.longitude), horizontal * std::sin(p.longitude),
          (re * (1.0 - m.eccentricity_sq) + p.height) * sin_lat};
}

CurvilinearPosition ecef_to_curvilinear(const EcefPosition& p, const EarthModel& m) {
  const double rho = std::hypot(p.x, p.y);
  const double norm = std::hypot(rho, p.z);
  if (!(norm > 0.0)) throw DomainError("ecef_to_curvilinear: zero-norm position");

  CurvilinearPosition out;
  out.longitude = (rho == 0.0) ? 0.0 : std::atan2(p.y, p.x);

  if (m.eccentricity_sq == 0.0) {
    using ld = long double;
    const ld x = p.x, y = p.y, z = p.z;
    const ld rho_l = std::sqrt(x * x + y * y);
    out.latitude = static_cast<double>(std::atan2(z, rho_l));
    out.height = static_cast<double>(std::sqrt(rho_l * rho_l + z * z) - static_cast<ld>(m.equatorial_radius));
    return out;
  }

  const double a = m.equatorial_radius;
  const double e2 = m.eccentricity_sq;
  double lat = std::atan2(p.z, rho * (1.0 - e2));
  double h = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double s = std::sin(lat);
    const double c = std::cos(lat);
    const double n = a / std::sqrt(1.0 - e2 * s * s);
    const double h_next = rho * c + p.z * s - a * a / n;
    const double lat_next = std::atan2(p.z + e2 * n * s, rho);
    const bool converged =
        std::abs(h_next - h) < 1e-12 && std::abs(lat_next - lat) * a < 1e-12;
    lat = lat_next;
    h = h_next;
    if (converged && i > 0) break;
  }
  out.latitude = lat;
  out.height = h;
  return out;
}

Vec3 gravity_ecef(const EcefPosition& p, const EarthModel& m) {
  const Vec3 r = p.vec();
  const double n = r.norm();
  if (!(n > 0.0)) throw DomainError("gravity_ecef: zero-norm position");
  return -m.gravity_magnitude * r / n;
}

RadiiOfCurvature radii_of_curvature(double latitude, const EarthModel& m) {
  const double a = m.equatorial_radius;
  const double e2 = m.eccentricity_sq;
  if (e2 == 0.0) return {a, a};
  const double s = std::sin(latitude);
  const double w = 1.0 - e2 * s * s;
  const double sw = std::sqrt(w);
  return {a / sw, a * (1.0 - e2) / (w * sw)};
}

namespace {

double checked_cos(double latitude) {
  const double c = std::cos(latitude);
  if (!(std::abs(c) >= kSingularCosTolerance) || std::abs(latitude) > kPi / 2.0)
    throw SingularLatitude(latitude);
  return c;
}

}  // namespace

Mat3 curvature_matrix(double latitude, double height, const EarthModel& m) {
  const double c = checked_cos(latitude);
  const auto radii = radii_of_curvature(latitude, m);
  Mat3 rc = Mat3::Zero();
  rc(0, 2) = 1.0 / ((radii.transverse + height) * c);
  rc(1, 0) = 1.0 / (radii.meridian + height);
  rc(2, 1) = 1.0;
  return rc;
}

// Second component uses v_E tan L; see README "Conventions".
Vec3 transport_rate(const Vec3& v_nue, double latitude, double height, const EarthModel& m) {
  const double c = checked_cos(latitude);
  const auto radii = radii_of_curvature(latitude, m);
  const double v_north = v_nue.x();
  const double v_east = v_nue.z();
  const double re_h = radii.transverse + height;
  return {v_east / re_h, v_east * (std::sin(latitude) / c) / re_h,
          -v_north / (radii.meridian + height)};
}

Vec3 earth_rotation_rate_nue(double latitude, const EarthModel& m) {
  return {m.rotation_rate * std::cos(latitude), m.rotation_rate * std::sin(latitude), 0.0};
}

Mat3 ecef_to_nue_dcm(double longitude, double latitude) {
  const double sl = std::sin(latitude), cl = std::cos(latitude);
  const double so = std::sin(longitude), co = std::cos(longitude);
  Mat3 c;
  c << -sl * co, -sl * so, cl,
        cl * co,  cl * so, sl,
       -so,       co,      0.0;
  return c;
}

}  // namespace polarnav

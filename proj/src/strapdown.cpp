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

#include "polarnav/strapdown.hpp"

#include <cmath>

#include "polarnav/errors.hpp"

namespace polarnav {

RotationVector coning_correction(const Vec3& dtheta1, const Vec3& dtheta2) {
  return dtheta1 + dtheta2 + (2.0 / 3.0) * dtheta1.cross(dtheta2);
}

Vec3 sculling_velocity(const Vec3& dtheta1, const Vec3& dtheta2, const Vec3& dv1,
                       const Vec3& dv2) {
  const Vec3 dtheta = dtheta1 + dtheta2;
  const Vec3 dv = dv1 + dv2;
  return dv + 0.5 * dtheta.cross(dv) +
         (2.0 / 3.0) * (dtheta1.cross(dv2) + dv1.cross(dtheta2));
}

EarthFrameState earth_frame_step(const EarthFrameState& s, const ImuIncrements& inc,
                                 const EarthModel& m) {
  const double T = inc.interval;
  const Vec3 omega_ie = m.rotation_vector();

  // C_{b_{k+1}}^{b_k} from the coning-corrected body rotation, and
  // C_{e_k}^{e_{k+1}} as the transpose of the Earth-rotation quaternion.
  const Quaternion body_turn = rotvec_to_quat(coning_correction(inc.dtheta1, inc.dtheta2));
  const Quaternion earth_turn = rotvec_to_quat(T * omega_ie);

  EarthFrameState next;
  next.q_be = earth_turn.conjugate() * s.q_be * body_turn;

  const Vec3 u = sculling_velocity(inc.dtheta1, inc.dtheta2, inc.dv1, inc.dv2);
  next.velocity = s.velocity + quat_to_dcm(s.q_be) * u - 2.0 * T * omega_ie.cross(s.velocity) +
                  T * gravity_ecef(s.position, m);

  next.position = EcefPosition::from(s.position.vec() + 0.5 * T * (s.velocity + next.velocity));
  next.time = s.time + T;
  return next;
}

LocalLevelState local_level_step(const LocalLevelState& s, const ImuIncrements& inc,
                                 const EarthModel& m) {
  const double T = inc.interval;
  const double lat = s.position.latitude;
  const double h = s.position.height;

  const Mat3 rc = curvature_matrix(lat, h, m);
  const Vec3 omega_en = transport_rate(s.velocity, lat, h, m);
  const Vec3 omega_ie = earth_rotation_rate_nue(lat, m);

  const Quaternion body_turn = rotvec_to_quat(coning_correction(inc.dtheta1, inc.dtheta2));
  const Quaternion nav_turn = rotvec_to_quat(T * (omega_ie + omega_en));

  LocalLevelState next;
  next.q_bn = nav_turn.conjugate() * s.q_bn * body_turn;

  const Mat3 c_en = ecef_to_nue_dcm(s.position.longitude, lat);
  const Vec3 g_n = c_en * gravity_ecef(curvilinear_to_ecef(s.position, m), m);

  const Vec3 u = sculling_velocity(inc.dtheta1, inc.dtheta2, inc.dv1, inc.dv2);
  next.velocity = s.velocity + quat_to_dcm(s.q_bn) * u -
                  T * (2.0 * omega_ie + omega_en).cross(s.velocity) + T * g_n;

  const Vec3 r = 0.5 * T * (s.velocity + next.velocity);
  const Vec3 rates = rc * r;
  next.position.longitude = wrap_longitude(s.position.longitude + rates.x());
  next.position.latitude = lat + rates.y();
  next.position.height = h + rates.z();
  next.time = s.time + T;

  const double new_lat = next.position.latitude;
  if (std::abs(new_lat) > kPi / 2.0 || std::abs(std::cos(new_lat)) < kSingularCosTolerance ||
      !std::isfinite(new_lat))
    throw SingularLatitude(new_lat);
  return next;
}

EarthFrameState vertical_reset_earth(const EarthFrameState& s, const EarthModel& m) {
  const CurvilinearPosition pn = ecef_to_curvilinear(s.position, m);
  const Mat3 c_en = ecef_to_nue_dcm(pn.longitude, pn.latitude);
  Vec3 v_n = c_en * s.velocity;
  v_n.y() = 0.0;
  EarthFrameState out = s;
  out.velocity = c_en.transpose() * v_n;
  return out;
}

LocalLevelState vertical_reset_llf(const LocalLevelState& s) {
  LocalLevelState out = s;
  out.velocity.y() = 0.0;
  return out;
}

EarthFrameRates continuous_rhs(const EarthFrameState& s, const Vec3& specific_force,
                               const Vec3& angular_rate, const EarthModel& m) {
  const Dcm c_be = quat_to_dcm(s.q_be);
  const Vec3 omega_ie = m.rotation_vector();
  EarthFrameRates r;
  r.body_rate_wrt_earth = angular_rate - c_be.transpose() * omega_ie;
  r.velocity_dot =
      c_be * specific_force - 2.0 * omega_ie.cross(s.velocity) + gravity_ecef(s.position, m);
  r.position_dot = s.velocity;
  return r;
}

EarthFrameState to_earth_frame(const LocalLevelState& s, const EarthModel& m) {
  const Mat3 c_en = ecef_to_nue_dcm(s.position.longitude, s.position.latitude);
  EarthFrameState out;
  out.q_be = dcm_to_quat(c_en.transpose()) * s.q_bn;
  out.velocity = c_en.transpose() * s.velocity;
  out.position = curvilinear_to_ecef(s.position, m);
  out.time = s.time;
  return out;
}

LocalLevelState to_local_level(const EarthFrameState& s, const EarthModel& m) {
  LocalLevelState out;
  out.position = ecef_to_curvilinear(s.position, m);
  const Mat3 c_en = ecef_to_nue_dcm(out.position.longitude, out.position.latitude);
  out.q_bn = dcm_to_quat(c_en) * s.q_be;
  out.velocity = c_en * s.velocity;
  out.time = s.time;
  return out;
}

}  // namespace polarnav

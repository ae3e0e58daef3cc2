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

// Implementation of polarnav::rk4_step; included from strapdown.hpp.

#include <Eigen/Dense>

namespace polarnav {
namespace detail {

struct RawRk4State {
  Eigen::Vector4d q;  // [s, x, y, z], not renormalized between stages
  Vec3 v;
  Vec3 p;
};

inline Eigen::Vector4d quat_rate(const Eigen::Vector4d& q, const Vec3& w) {
  // q_dot = 0.5 * q (x) [0, w]
  const double s = q[0];
  const Vec3 eta = q.tail<3>();
  Eigen::Vector4d out;
  out[0] = -0.5 * eta.dot(w);
  out.tail<3>() = 0.5 * (s * w + eta.cross(w));
  return out;
}

}  // namespace detail

template <typename ForceFn, typename RateFn>
EarthFrameState rk4_step(const EarthFrameState& s, double h, ForceFn&& specific_force,
                         RateFn&& angular_rate, const EarthModel& m) {
  using detail::RawRk4State;

  auto deriv = [&](const RawRk4State& x, double t) {
    EarthFrameState st;
    st.q_be = Quaternion(x.q[0], x.q.tail<3>());
    st.velocity = x.v;
    st.position = EcefPosition::from(x.p);
    st.time = t;
    const EarthFrameRates r = continuous_rhs(st, specific_force(t), angular_rate(t), m);
    RawRk4State d;
    d.q = detail::quat_rate(x.q, r.body_rate_wrt_earth);
    d.v = r.velocity_dot;
    d.p = r.position_dot;
    return d;
  };
  auto axpy = [](const RawRk4State& x, double a, const RawRk4State& d) {
    return RawRk4State{x.q + a * d.q, x.v + a * d.v, x.p + a * d.p};
  };

  const RawRk4State x0{{s.q_be.scalar(), s.q_be.vector().x(), s.q_be.vector().y(),
                        s.q_be.vector().z()},
                       s.velocity,
                       s.position.vec()};
  const double t = s.time;
  const RawRk4State k1 = deriv(x0, t);
  const RawRk4State k2 = deriv(axpy(x0, 0.5 * h, k1), t + 0.5 * h);
  const RawRk4State k3 = deriv(axpy(x0, 0.5 * h, k2), t + 0.5 * h);
  const RawRk4State k4 = deriv(axpy(x0, h, k3), t + h);

  const double w = h / 6.0;
  const Eigen::Vector4d q = x0.q + w * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
  EarthFrameState out;
  out.q_be = Quaternion(q[0], q.tail<3>());
  out.velocity = x0.v + w * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
  out.position = EcefPosition::from(x0.p + w * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p));
  out.time = t + h;
  return out;
}

}  // namespace polarnav

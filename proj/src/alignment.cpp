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

#include "polarnav/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "polarnav/errors.hpp"

namespace polarnav {

AlignmentAccumulator::AlignmentAccumulator(EarthModel earth) : earth_(earth) {}

void AlignmentAccumulator::ingest_imu(const ImuIncrements& inc) {
  const Vec3 u = sculling_velocity(inc.dtheta1, inc.dtheta2, inc.dv1, inc.dv2);
  alpha_ += quat_to_dcm(q_body_) * u;
  q_body_ = q_body_ * rotvec_to_quat(coning_correction(inc.dtheta1, inc.dtheta2));
  t_imu_ += inc.interval;
  last_interval_ = inc.interval;
}

std::optional<VectorPair> AlignmentAccumulator::ingest_gnss(double t, const Vec3& velocity,
                                                            const EcefPosition& position) {
  if (have_gnss_ && !(t > t_gnss_)) {
    std::ostringstream os;
    os << "GNSS epoch " << t << " s does not follow " << t_gnss_ << " s";
    throw DomainError(os.str());
  }
  const double slack = std::max(last_interval_, 1e-9);
  if (std::abs(t - t_imu_) > slack * (1.0 + 1e-9)) {
    std::ostringstream os;
    os << "GNSS epoch " << t << " s is not aligned with IMU epoch " << t_imu_ << " s";
    throw DomainError(os.str());
  }

  const Dcm c = earth_frame_rotation(t, earth_);
  const Vec3 coriolis = c * earth_.rotation_vector().cross(velocity);
  const Vec3 gravity = c * gravity_ecef(position, earth_);

  if (!have_gnss_) {
    if (t_imu_ > 0.0 || std::abs(t) > slack)
      throw DomainError("the first GNSS sample must be taken at t = 0, before any IMU data");
    have_gnss_ = true;
    v0_ = velocity;
    beta_.setZero();
  } else {
    const double dt = t - t_gnss_;
    coriolis_integral_ += 0.5 * dt * (coriolis_integrand_ + coriolis);
    gravity_integral_ += 0.5 * dt * (gravity_integrand_ + gravity);
    beta_ = c * velocity - v0_ + coriolis_integral_ - gravity_integral_;
  }
  coriolis_integrand_ = coriolis;
  gravity_integrand_ = gravity;
  t_gnss_ = t;

  const double na = alpha_.norm();
  const double nb = beta_.norm();
  if (na > kPairFloor && nb > kPairFloor) {
    pairs_.push_back({alpha_ / na, beta_ / nb, t});
    return pairs_.back();
  }
  return std::nullopt;
}

Eigen::Matrix4d davenport_matrix(const std::vector<VectorPair>& pairs) {
  Mat3 b = Mat3::Zero();
  for (const auto& p : pairs) b += p.beta_hat * p.alpha_hat.transpose();

  const double sigma = b.trace();
  const Vec3 z{b(2, 1) - b(1, 2), b(0, 2) - b(2, 0), b(1, 0) - b(0, 1)};
  Eigen::Matrix4d k;
  k(0, 0) = sigma;
  k.block<1, 3>(0, 1) = z.transpose();
  k.block<3, 1>(1, 0) = z;
  k.block<3, 3>(1, 1) = b + b.transpose() - sigma * Mat3::Identity();
  return k;
}

SymmetricEigen4 jacobi_eigen(const Eigen::Matrix4d& k) {
  Eigen::Matrix4d a = 0.5 * (k + k.transpose());
  Eigen::Matrix4d v = Eigen::Matrix4d::Identity();
  const double scale = std::max(a.norm(), 1e-300);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < 4; ++r) {
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < 4; ++r) {
          const double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        for (int r = 0; r < 4; ++r) {
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });
  SymmetricEigen4 out;
  for (int i = 0; i < 4; ++i) {
    out.values[i] = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

AlignmentSolution solve_initial_attitude(const std::vector<VectorPair>& pairs) {
  if (pairs.size() < 2) {
    std::ostringstream os;
    os << "alignment needs at least 2 observation pairs, have " << pairs.size();
    throw InsufficientObservations(os.str());
  }
  const SymmetricEigen4 eig = jacobi_eigen(davenport_matrix(pairs));

  AlignmentSolution sol;
  sol.n_pairs = pairs.size();
  sol.eigenvalues = eig.values;
  sol.quality = std::max(0.0, (eig.values[0] - eig.values[1]) / static_cast<double>(pairs.size()));
  const Eigen::Vector4d q = eig.vectors.col(0);
  const double sign = q[0] < 0.0 ? -1.0 : 1.0;
  sol.q_be0 = Quaternion(sign * q[0], sign * q.tail<3>());

  if (sol.quality < kDegeneracyThreshold) {
    std::ostringstream os;
    os << "observation pairs do not constrain the attitude (quality " << sol.quality << ")";
    throw DegenerateGeometry(os.str(), sol.quality);
  }
  return sol;
}

AlignmentSolution solve_initial_attitude(const AlignmentAccumulator& acc) {
  return solve_initial_attitude(acc.observations());
}

Dcm current_attitude(const AlignmentSolution& sol, const AlignmentAccumulator& acc) {
  return earth_frame_rotation(acc.elapsed(), acc.earth()).transpose() * quat_to_dcm(sol.q_be0) *
         quat_to_dcm(acc.body_rotation());
}

}  // namespace polarnav

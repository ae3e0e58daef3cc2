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

#include <array>
#include <optional>
#include <vector>

#include "polarnav/attitude.hpp"
#include "polarnav/geodesy.hpp"
#include "polarnav/strapdown.hpp"

namespace polarnav {

/// Floor on |alpha| and |beta| (m/s) below which a GNSS epoch does not
/// produce an observation pair.
inline constexpr double kPairFloor = 0.1;

/// Minimum eigenvalue-gap quality accepted by solve_initial_attitude.
inline constexpr double kDegeneracyThreshold = 1e-3;

/// One normalized observation: C_b^e(0) * alpha_hat ~= beta_hat.
struct VectorPair {
  Vec3 alpha_hat;
  Vec3 beta_hat;
  double t;
};

/// In-motion coarse alignment in the Earth frame.
///
/// Body-frame increments accumulate
///   alpha(t) = int C_{b(t)}^{b(0)} f^b dt
/// and GNSS epochs accumulate
///   beta(t) = C_{e(t)}^{e(0)} v^e - v^e(0)
///           + int C_{e(t)}^{e(0)} (omega_ie x v^e) dt
///           - int C_{e(t)}^{e(0)} g^e dt,
/// so that C_b^e(0) alpha = beta at every epoch. IMU and GNSS data must be
/// fed in time order; the first GNSS sample is expected at t = 0.
class AlignmentAccumulator {
 public:
  explicit AlignmentAccumulator(EarthModel earth = {});

  void ingest_imu(const ImuIncrements& inc);

  /// Returns the pair stored for this epoch, if any. Throws DomainError on
  /// non-monotonic timestamps or when t is more than one navigation
  /// interval away from the IMU epoch.
  std::optional<VectorPair> ingest_gnss(double t, const Vec3& velocity, const EcefPosition& position);

  double elapsed() const { return t_imu_; }
  const Quaternion& body_rotation() const { return q_body_; }  // C_{b(t)}^{b(0)}
  const Vec3& alpha() const { return alpha_; }
  const Vec3& beta() const { return beta_; }
  const std::vector<VectorPair>& observations() const { return pairs_; }
  const EarthModel& earth() const { return earth_; }

 private:
  EarthModel earth_;
  Quaternion q_body_;
  Vec3 alpha_ = Vec3::Zero();
  double t_imu_ = 0.0;
  double last_interval_ = 0.0;

  bool have_gnss_ = false;
  double t_gnss_ = 0.0;
  Vec3 v0_ = Vec3::Zero();
  Vec3 coriolis_integrand_ = Vec3::Zero();
  Vec3 gravity_integrand_ = Vec3::Zero();
  Vec3 coriolis_integral_ = Vec3::Zero();
  Vec3 gravity_integral_ = Vec3::Zero();
  Vec3 beta_ = Vec3::Zero();

  std::vector<VectorPair> pairs_;
};

struct AlignmentSolution {
  Quaternion q_be0;  // C_b^e(0)
  double quality = 0.0;
  std::size_t n_pairs = 0;
  std::array<double, 4> eigenvalues{};  // descending
};

/// Davenport q-method on equally weighted pairs. Throws
/// InsufficientObservations (< 2 pairs) or DegenerateGeometry
/// (quality < kDegeneracyThreshold).
AlignmentSolution solve_initial_attitude(const std::vector<VectorPair>& pairs);
AlignmentSolution solve_initial_attitude(const AlignmentAccumulator& acc);

/// C_b^e(t) = C_{e(0)}^{e(t)} C_b^e(0) C_{b(t)}^{b(0)} at the accumulator epoch.
Dcm current_attitude(const AlignmentSolution& sol, const AlignmentAccumulator& acc);

/// Eigen-decomposition of a symmetric 4x4 matrix by cyclic Jacobi rotations.
/// Eigenvalues are sorted descending; column i of `vectors` belongs to
/// values[i].
struct SymmetricEigen4 {
  std::array<double, 4> values{};
  Eigen::Matrix4d vectors = Eigen::Matrix4d::Identity();
};

SymmetricEigen4 jacobi_eigen(const Eigen::Matrix4d& k);

/// The 4x4 Davenport matrix whose maximum-eigenvalue eigenvector (scalar
/// first) maximizes sum_i beta_i . C alpha_i.
Eigen::Matrix4d davenport_matrix(const std::vector<VectorPair>& pairs);

}  // namespace polarnav

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

#include <gtest/gtest.h>

#include <cmath>

#include "polarnav/errors.hpp"
#include "polarnav/geodesy.hpp"
#include "test_util.hpp"

using namespace polarnav;
using polarnav::testing::uniform;

namespace {

constexpr double kR = 6378137.0;
const EarthModel kSphere{};

EarthModel wgs84_like() {
  EarthModel m;
  m.eccentricity_sq = 0.0066943799901413165;
  return m;
}

}  // namespace

TEST(EarthModel, DefaultsAreTheSphere) {
  EXPECT_EQ(kSphere.equatorial_radius, 6378137.0);
  EXPECT_EQ(kSphere.eccentricity_sq, 0.0);
  EXPECT_EQ(kSphere.rotation_rate, 7.292115e-5);
  EXPECT_EQ(kSphere.gravity_magnitude, 9.80665);
  EXPECT_NO_THROW(kSphere.validate());
}

TEST(EarthModel, RejectsOutOfRangeFields) {
  EarthModel m;
  m.equatorial_radius = 0.0;
  EXPECT_THROW(m.validate(), DomainError);
  m = {};
  m.eccentricity_sq = 1.0;
  EXPECT_THROW(m.validate(), DomainError);
  m = {};
  m.rotation_rate = -1e-5;
  EXPECT_THROW(m.validate(), DomainError);
  m = {};
  m.gravity_magnitude = 0.0;
  EXPECT_THROW(m.validate(), DomainError);
}

TEST(CurvilinearToEcef, AxesAndPole) {
  const EcefPosition a = curvilinear_to_ecef({0.0, 0.0, 0.0}, kSphere);
  EXPECT_DOUBLE_EQ(a.x, kR);
  EXPECT_DOUBLE_EQ(a.y, 0.0);
  EXPECT_DOUBLE_EQ(a.z, 0.0);

  const EcefPosition p = curvilinear_to_ecef({0.0, kPi / 2.0, 0.0}, kSphere);
  EXPECT_NEAR(p.x, 0.0, 1e-9);
  EXPECT_NEAR(p.y, 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(p.z, kR);
}

TEST(CurvilinearToEcef, StartOfPolarFlights) {
  // 40-digit evaluation of (R+h)[cosL cos lon, cosL sin lon, sinL].
  const EcefPosition p = curvilinear_to_ecef({120.0 * kDegToRad, 50.0 * kDegToRad, 10000.0}, kSphere);
  EXPECT_NEAR(p.x, -2053107.656290070136, 1e-6);
  EXPECT_NEAR(p.y, 3556086.774103060932, 1e-6);
  EXPECT_NEAR(p.z, 4893596.850732738989, 1e-6);
}

TEST(EcefToCurvilinear, ClosedFormCases) {
  const CurvilinearPosition a = ecef_to_curvilinear({kR, 0.0, 0.0}, kSphere);
  EXPECT_DOUBLE_EQ(a.longitude, 0.0);
  EXPECT_DOUBLE_EQ(a.latitude, 0.0);
  EXPECT_DOUBLE_EQ(a.height, 0.0);

  const CurvilinearPosition pole = ecef_to_curvilinear({0.0, 0.0, kR + 10000.0}, kSphere);
  EXPECT_EQ(pole.longitude, 0.0);
  EXPECT_DOUBLE_EQ(pole.latitude, kPi / 2.0);
  EXPECT_DOUBLE_EQ(pole.height, 10000.0);

  const CurvilinearPosition start = ecef_to_curvilinear(
      curvilinear_to_ecef({120.0 * kDegToRad, 50.0 * kDegToRad, 10000.0}, kSphere), kSphere);
  EXPECT_NEAR(start.longitude * kR, 120.0 * kDegToRad * kR, 1e-6);
  EXPECT_NEAR(start.latitude * kR, 50.0 * kDegToRad * kR, 1e-6);
  EXPECT_NEAR(start.height, 10000.0, 1e-6);
}

TEST(EcefToCurvilinear, ZeroNormIsADomainError) {
  EXPECT_THROW(ecef_to_curvilinear({0.0, 0.0, 0.0}, kSphere), DomainError);
  EXPECT_THROW(ecef_to_curvilinear({0.0, 0.0, 0.0}, wgs84_like()), DomainError);
}

TEST(EcefToCurvilinear, SphereRoundTripProperty) {
  for (int i = 0; i < 2000; ++i) {
    const CurvilinearPosition p{uniform(-kPi + 1e-9, kPi), uniform(-89.999, 89.999) * kDegToRad,
                                uniform(-1000.0, 50000.0)};
    const CurvilinearPosition q = ecef_to_curvilinear(curvilinear_to_ecef(p, kSphere), kSphere);
    EXPECT_NEAR(q.height, p.height, 1e-9);
    EXPECT_NEAR(q.latitude, p.latitude, 1e-15);
    EXPECT_NEAR(wrap_longitude(q.longitude - p.longitude), 0.0, 1e-15);
  }
}

TEST(EcefToCurvilinear, EllipsoidRoundTripProperty) {
  const EarthModel m = wgs84_like();
  for (int i = 0; i < 1000; ++i) {
    const CurvilinearPosition p{uniform(-kPi + 1e-9, kPi), uniform(-90.0, 90.0) * kDegToRad,
                                uniform(-1000.0, 50000.0)};
    const EcefPosition e = curvilinear_to_ecef(p, m);
    const EcefPosition back = curvilinear_to_ecef(ecef_to_curvilinear(e, m), m);
    EXPECT_NEAR((back.vec() - e.vec()).norm(), 0.0, 1e-8);
  }
}

TEST(GravityEcef, RadialConstantMagnitude) {
  const Vec3 g1 = gravity_ecef({kR, 0.0, 0.0}, kSphere);
  EXPECT_DOUBLE_EQ(g1.x(), -9.80665);
  EXPECT_DOUBLE_EQ(g1.y(), 0.0);
  EXPECT_DOUBLE_EQ(g1.z(), 0.0);
  const Vec3 g2 = gravity_ecef({0.0, 0.0, kR}, kSphere);
  EXPECT_DOUBLE_EQ(g2.z(), -9.80665);
  for (int i = 0; i < 200; ++i) {
    const Vec3 p = polarnav::testing::random_vector(-1e7, 1e7);
    EXPECT_NEAR(gravity_ecef(EcefPosition::from(p), kSphere).norm(), 9.80665, 1e-14);
  }
  EXPECT_THROW(gravity_ecef({0.0, 0.0, 0.0}, kSphere), DomainError);
}

TEST(RadiiOfCurvature, SphereAndEllipsoid) {
  for (double lat : {-90.0, -33.0, 0.0, 45.0, 89.0, 90.0}) {
    const auto r = radii_of_curvature(lat * kDegToRad, kSphere);
    EXPECT_EQ(r.transverse, kR);
    EXPECT_EQ(r.meridian, kR);
  }
  const EarthModel m = wgs84_like();
  const auto eq = radii_of_curvature(0.0, m);
  EXPECT_DOUBLE_EQ(eq.transverse, kR);
  EXPECT_NEAR(eq.meridian, 6335439.32729282003, 1e-7);
  const auto pole = radii_of_curvature(kPi / 2.0, m);
  EXPECT_NEAR(pole.transverse, 6399593.62575849307, 1e-7);
  EXPECT_NEAR(pole.meridian, 6399593.62575849307, 1e-7);
}

TEST(CurvatureMatrix, EquatorAndSixtyDegrees) {
  const Mat3 rc = curvature_matrix(0.0, 0.0, kSphere);
  Mat3 expected = Mat3::Zero();
  expected(0, 2) = 1.0 / kR;
  expected(1, 0) = 1.0 / kR;
  expected(2, 1) = 1.0;
  EXPECT_LT((rc - expected).cwiseAbs().maxCoeff(), 1e-22);

  EXPECT_NEAR(curvature_matrix(60.0 * kDegToRad, 0.0, kSphere)(0, 2), 2.0 / kR, 1e-20);
}

TEST(CurvatureMatrix, SingularNearThePole) {
  EXPECT_THROW(curvature_matrix(89.99999 * kDegToRad, 0.0, kSphere), SingularLatitude);
  EXPECT_THROW(curvature_matrix(-kPi / 2.0, 0.0, kSphere), SingularLatitude);
  try {
    curvature_matrix(kPi / 2.0, 0.0, kSphere);
    FAIL() << "expected SingularLatitude";
  } catch (const SingularLatitude& e) {
    EXPECT_DOUBLE_EQ(e.latitude(), kPi / 2.0);
  }
  EXPECT_NO_THROW(curvature_matrix(89.99 * kDegToRad, 0.0, kSphere));
}

TEST(TransportRate, Examples) {
  EXPECT_EQ(transport_rate(Vec3::Zero(), 0.7, 100.0, kSphere), Vec3::Zero());

  const Vec3 w = transport_rate({0.0, 0.0, 250.0}, 0.0, 1000.0, kSphere);
  EXPECT_DOUBLE_EQ(w.x(), 250.0 / (kR + 1000.0));
  EXPECT_DOUBLE_EQ(w.y(), 0.0);
  EXPECT_DOUBLE_EQ(w.z(), 0.0);

  const Vec3 n = transport_rate({2000.0, 0.0, 0.0}, 45.0 * kDegToRad, 0.0, kSphere);
  EXPECT_DOUBLE_EQ(n.x(), 0.0);
  EXPECT_DOUBLE_EQ(n.y(), 0.0);
  EXPECT_NEAR(n.z(), -3.135711885774795994e-4, 1e-18);

  EXPECT_THROW(transport_rate({1.0, 0.0, 1.0}, kPi / 2.0, 0.0, kSphere), SingularLatitude);
}

TEST(TransportRate, ConsistentWithCurvatureMatrix) {
  // A frame carried along with the curvilinear rates L_dot, lon_dot rotates
  // at [lon_dot cosL, lon_dot sinL, -L_dot] in N-U-E.
  for (int i = 0; i < 200; ++i) {
    const double lat = uniform(-80.0, 80.0) * kDegToRad;
    const double h = uniform(0.0, 20000.0);
    const Vec3 v = polarnav::testing::random_vector(-300.0, 300.0);
    const Vec3 rates = curvature_matrix(lat, h, kSphere) * v;
    const Vec3 expected{rates.x() * std::cos(lat), rates.x() * std::sin(lat), -rates.y()};
    EXPECT_LT((transport_rate(v, lat, h, kSphere) - expected).norm(), 1e-18);
  }
}

TEST(EarthRotationRateNue, Examples) {
  const double om = kSphere.rotation_rate;
  EXPECT_EQ(earth_rotation_rate_nue(0.0, kSphere), Vec3(om, 0.0, 0.0));
  const Vec3 p = earth_rotation_rate_nue(kPi / 2.0, kSphere);
  EXPECT_NEAR(p.x(), 0.0, 1e-20);
  EXPECT_DOUBLE_EQ(p.y(), om);
  const Vec3 w = earth_rotation_rate_nue(50.0 * kDegToRad, kSphere);
  EXPECT_NEAR(w.x(), 4.687281170409358720e-5, 1e-19);
  EXPECT_NEAR(w.y(), 5.586084174334546515e-5, 1e-19);
  EXPECT_EQ(w.z(), 0.0);
}

TEST(EcefToNueDcm, Examples) {
  Mat3 expected;
  expected << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  EXPECT_LT((ecef_to_nue_dcm(0.0, 0.0) - expected).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(EcefToNueDcm, OrthonormalProperty) {
  for (int i = 0; i < 1000; ++i) {
    const Mat3 c = ecef_to_nue_dcm(uniform(-4.0, 4.0), uniform(-kPi / 2, kPi / 2));
    EXPECT_LT(polarnav::testing::orthonormality_error(c), 1e-14);
    EXPECT_NEAR(c.determinant(), 1.0, 1e-14);
  }
}

TEST(EcefToNueDcm, SphereGravityIsLocalDown) {
  for (int i = 0; i < 500; ++i) {
    const CurvilinearPosition p{uniform(-kPi, kPi), uniform(-kPi / 2, kPi / 2), uniform(0.0, 1e4)};
    const Vec3 g_n = ecef_to_nue_dcm(p.longitude, p.latitude) *
                     gravity_ecef(curvilinear_to_ecef(p, kSphere), kSphere);
    EXPECT_NEAR(g_n.x(), 0.0, 1e-12);
    EXPECT_NEAR(g_n.z(), 0.0, 1e-12);
    EXPECT_NEAR(g_n.y(), -9.80665, 1e-12);
  }
}

TEST(WrapLongitude, HalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_longitude(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_longitude(-kPi), kPi);
  EXPECT_NEAR(wrap_longitude(3.0 * kPi / 2.0), -kPi / 2.0, 1e-15);
  EXPECT_NEAR(wrap_longitude(300.0 * kDegToRad), -60.0 * kDegToRad, 1e-15);
}

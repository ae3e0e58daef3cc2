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

#include "polarnav/trajgen.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "polarnav/errors.hpp"

namespace polarnav {

namespace {

double geometric_radius(const ScenarioConfig& cfg) {
  return cfg.earth.equatorial_radius + cfg.h0;
}

void check_epoch(double t, const ScenarioConfig& cfg) {
  const double slack = 1e-9 * std::max(1.0, cfg.duration);
  if (!(t >= -slack && t <= cfg.duration + slack)) {
    std::ostringstream os;
    os << "epoch " << t << " s outside [0, " << cfg.duration << "] s";
    throw DomainError(os.str());
  }
}

bool is_integer(double x) { return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)); }

}  // namespace

long ScenarioConfig::nav_steps() const { return std::lround(duration / nav_interval()); }

void ScenarioConfig::validate() const {
  try {
    earth.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (earth.eccentricity_sq != 0.0)
    throw ConfigError("trajectory synthesis requires a spherical earth (eccentricity_sq = 0)");
  if (!(std::abs(lat0_deg) <= 90.0)) throw ConfigError("lat0_deg must lie in [-90, 90]");
  if (!std::isfinite(lon0_deg)) throw ConfigError("lon0_deg must be finite");
  if (!(h0 > -earth.equatorial_radius) || !std::isfinite(h0))
    throw ConfigError("h0 must be finite and above the earth centre");
  if (!std::isfinite(speed)) throw ConfigError("speed must be finite");
  if (!(duration > 0.0) || !std::isfinite(duration)) throw ConfigError("duration must be positive");
  if (!(imu_rate > 0.0) || !std::isfinite(imu_rate)) throw ConfigError("imu_rate must be positive");
  if (!(gnss_rate > 0.0) || !std::isfinite(gnss_rate))
    throw ConfigError("gnss_rate must be positive");
  if (!is_integer(duration / nav_interval()))
    throw ConfigError("duration must be a whole number of navigation intervals (2 / imu_rate)");
  if (!is_integer((imu_rate / 2.0) / gnss_rate))
    throw ConfigError("gnss_rate must divide the navigation rate (imu_rate / 2)");
  if (path_kind == PathKind::kParallel && !(std::abs(std::cos(lat0())) > kSingularCosTolerance))
    throw ConfigError("parallel path requires a latitude away from the poles");
}

ScenarioConfig builtin_scenario_south() {
  ScenarioConfig cfg;
  cfg.name = "south";
  cfg.path_kind = PathKind::kMeridian;
  cfg.lon0_deg = 120.0;
  cfg.lat0_deg = 50.0;
  cfg.h0 = 10000.0;
  cfg.speed = -2000.0;
  cfg.duration = 3600.0;
  return cfg;
}

ScenarioConfig builtin_scenario_north() {
  ScenarioConfig cfg = builtin_scenario_south();
  cfg.name = "north";
  cfg.speed = 2000.0;
  cfg.duration = 5400.0;
  return cfg;
}

TruthSample truth_at(double t, const ScenarioConfig& cfg) {
  check_epoch(t, cfg);
  const double r = geometric_radius(cfg);
  const double v = cfg.speed;

  TruthSample out;
  out.t = t;
  out.curvilinear.height = cfg.h0;

  if (cfg.path_kind == PathKind::kMeridian) {
    // Unwrapped great-circle angle; p^e, v^e stay smooth through the poles.
    const double phi = cfg.lat0() + v / r * t;
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double cl = std::cos(cfg.lon0()), sl = std::sin(cfg.lon0());
    const Vec3 radial{cp * cl, cp * sl, sp};
    out.ecef = EcefPosition::from(r * radial);
    out.velocity = v * Vec3{-sp * cl, -sp * sl, cp};
    out.acceleration = -(v * v / r) * radial;

    double lat = std::remainder(phi, 2.0 * kPi);
    double lon = cfg.lon0();
    if (lat > kPi / 2.0) {
      lat = kPi - lat;
      lon += kPi;
    } else if (lat < -kPi / 2.0) {
      lat = -kPi - lat;
      lon += kPi;
    }
    out.curvilinear.latitude = lat;
    out.curvilinear.longitude = wrap_longitude(lon);
  } else {
    const double cl0 = std::cos(cfg.lat0()), sl0 = std::sin(cfg.lat0());
    const double lon_rate = v / (r * cl0);
    const double lon = cfg.lon0() + lon_rate * t;
    const double co = std::cos(lon), so = std::sin(lon);
    out.ecef = EcefPosition::from(r * Vec3{cl0 * co, cl0 * so, sl0});
    out.velocity = v * Vec3{-so, co, 0.0};
    out.acceleration = -v * lon_rate * Vec3{co, so, 0.0};
    out.curvilinear.latitude = cfg.lat0();
    out.curvilinear.longitude = wrap_longitude(lon);
  }
  return out;
}

Vec3 specific_force_at(double t, const ScenarioConfig& cfg) {
  const TruthSample s = truth_at(t, cfg);
  // C_b^e = I, so body and ECEF components coincide.
  return s.acceleration + 2.0 * cfg.earth.rotation_vector().cross(s.velocity) -
         gravity_ecef(s.ecef, cfg.earth);
}

Vec3 angular_rate_at(double /*t*/, const ScenarioConfig& cfg) {
  return cfg.earth.rotation_vector();
}

SensorIncrement imu_increments_at(double t_a, double t_b, const ScenarioConfig& cfg) {
  static constexpr std::array<double, 5> kNodes{
      0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> kWeights{
      0.5688888888888889, 0.4786286704993665, 0.4786286704993665, 0.2369268850561891,
      0.2369268850561891};

  const double half = 0.5 * (t_b - t_a);
  const double mid = 0.5 * (t_a + t_b);
  SensorIncrement inc;
  for (std::size_t i = 0; i < kNodes.size(); ++i)
    inc.dv += kWeights[i] * specific_force_at(mid + half * kNodes[i], cfg);
  inc.dv *= half;
  inc.dtheta = cfg.earth.rotation_vector() * (t_b - t_a);
  return inc;
}

ImuIncrements nav_increments(long k, const ScenarioConfig& cfg) {
  const double T = cfg.nav_interval();
  const double t0 = static_cast<double>(k) * T;
  const double t1 = (static_cast<double>(k) + 0.5) * T;
  const double t2 = static_cast<double>(k + 1) * T;
  const SensorIncrement a = imu_increments_at(t0, t1, cfg);
  const SensorIncrement b = imu_increments_at(t1, t2, cfg);
  return {a.dtheta, b.dtheta, a.dv, b.dv, T};
}

GnssSample gnss_sample_at(double t, const ScenarioConfig& cfg) {
  const TruthSample s = truth_at(t, cfg);
  return {s.ecef, s.velocity};
}

EarthFrameState initial_earth_state(const ScenarioConfig& cfg) {
  const TruthSample s = truth_at(0.0, cfg);
  EarthFrameState st;
  st.q_be = dcm_to_quat(s.c_be);
  st.velocity = s.velocity;
  st.position = s.ecef;
  st.time = 0.0;
  return st;
}

LocalLevelState initial_local_level_state(const ScenarioConfig& cfg) {
  const TruthSample s = truth_at(0.0, cfg);
  const Mat3 c_en = ecef_to_nue_dcm(s.curvilinear.longitude, s.curvilinear.latitude);
  LocalLevelState st;
  st.q_bn = dcm_to_quat(c_en * s.c_be);
  st.velocity = c_en * s.velocity;
  st.position = s.curvilinear;
  st.time = 0.0;
  return st;
}

}  // namespace polarnav

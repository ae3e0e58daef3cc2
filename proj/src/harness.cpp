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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polarnav/errors.hpp"
#include "polarnav/harness.hpp"

namespace polarnav {

namespace {

long steps_per_second(const ScenarioConfig& cfg) {
  const double per_second = 1.0 / cfg.nav_interval();
  const long n = std::lround(per_second);
  if (n < 1 || std::abs(per_second - static_cast<double>(n)) > 1e-9 * per_second)
    throw ConfigError("the navigation rate (imu_rate / 2) must be a whole number of Hz");
  return n;
}

ErrorRecord make_record(double t, const EcefPosition& est_pos, const Vec3& est_vel,
                        const CurvilinearPosition& est_curv, const ScenarioConfig& cfg) {
  const TruthSample truth = truth_at(t, cfg);
  ErrorRecord r;
  r.t = t;
  r.pos_err_ecef = est_pos.vec() - truth.ecef.vec();
  r.pos_err = position_error(est_pos, truth.ecef);
  r.vel_err = (est_vel - truth.velocity).norm();
  r.lat_deg = est_curv.latitude * kRadToDeg;
  r.lon_deg = est_curv.longitude * kRadToDeg;
  r.height = est_curv.height;
  return r;
}

ErrorRecord earth_record(double t, const EarthFrameState& s, const ScenarioConfig& cfg) {
  const DisplayState d = display_transform(s, cfg.earth);
  return make_record(t, s.position, s.velocity, d.position, cfg);
}

ErrorRecord llf_record(double t, const LocalLevelState& s, const ScenarioConfig& cfg) {
  const Mat3 c_ne = ecef_to_nue_dcm(s.position.longitude, s.position.latitude).transpose();
  return make_record(t, curvilinear_to_ecef(s.position, cfg.earth), c_ne * s.velocity, s.position,
                     cfg);
}

RunReport run_earth(const ScenarioConfig& cfg, long record_every) {
  RunReport rep;
  rep.scenario = cfg.name;
  rep.mechanization = Mechanization::kEarth;
  rep.config = cfg;

  EarthFrameState s = initial_earth_state(cfg);
  rep.series.push_back(earth_record(0.0, s, cfg));
  const long n = cfg.nav_steps();
  const double T = cfg.nav_interval();
  for (long k = 0; k < n; ++k) {
    s = vertical_reset_earth(earth_frame_step(s, nav_increments(k, cfg), cfg.earth), cfg.earth);
    if ((k + 1) % record_every == 0 || k + 1 == n)
      rep.series.push_back(earth_record(static_cast<double>(k + 1) * T, s, cfg));
  }
  rep.summary = summarize(rep.series);
  return rep;
}

RunReport run_llf(const ScenarioConfig& cfg, long record_every) {
  RunReport rep;
  rep.scenario = cfg.name;
  rep.mechanization = Mechanization::kLocalLevel;
  rep.config = cfg;

  LocalLevelState s = initial_local_level_state(cfg);
  rep.series.push_back(llf_record(0.0, s, cfg));
  const long n = cfg.nav_steps();
  const double T = cfg.nav_interval();
  for (long k = 0; k < n; ++k) {
    const double t = static_cast<double>(k + 1) * T;
    try {
      s = vertical_reset_llf(local_level_step(s, nav_increments(k, cfg), cfg.earth));
    } catch (const SingularLatitude&) {
      // Errors of the last valid estimate, stamped with the failing epoch.
      ErrorRecord r = llf_record(s.time, s, cfg);
      r.t = t;
      r.singular = true;
      rep.series.push_back(r);
      break;
    }
    if ((k + 1) % record_every == 0 || k + 1 == n) rep.series.push_back(llf_record(t, s, cfg));
  }
  rep.summary = summarize(rep.series);
  return rep;
}

}  // namespace

const char* to_string(Mechanization mech) {
  switch (mech) {
    case Mechanization::kEarth:
      return "earth";
    case Mechanization::kLocalLevel:
      return "llf";
    case Mechanization::kBoth:
      return "both";
  }
  return "?";
}

Mechanization parse_mechanization(const std::string& s) {
  if (s == "earth") return Mechanization::kEarth;
  if (s == "llf") return Mechanization::kLocalLevel;
  if (s == "both") return Mechanization::kBoth;
  throw ConfigError("mechanization must be earth, llf or both; got '" + s + "'");
}

const char* to_string(AlignmentStatus status) {
  switch (status) {
    case AlignmentStatus::kOk:
      return "ok";
    case AlignmentStatus::kInsufficient:
      return "insufficient";
    case AlignmentStatus::kDegenerate:
      return "degenerate";
  }
  return "?";
}

double position_error(const EcefPosition& estimate, const EcefPosition& truth) {
  return (estimate.vec() - truth.vec()).norm();
}

RunSummary summarize(const std::vector<ErrorRecord>& series) {
  RunSummary s;
  for (const auto& r : series) {
    s.max_pos_err = std::max(s.max_pos_err, r.pos_err);
    if (r.singular && !s.singular_at) s.singular_at = r.t;
  }
  if (!series.empty()) s.final_pos_err = series.back().pos_err;
  return s;
}

std::vector<RunReport> run_scenario(const ScenarioConfig& cfg, Mechanization mech) {
  cfg.validate();
  const long every = steps_per_second(cfg);
  std::vector<RunReport> out;
  if (mech == Mechanization::kEarth || mech == Mechanization::kBoth)
    out.push_back(run_earth(cfg, every));
  if (mech == Mechanization::kLocalLevel || mech == Mechanization::kBoth)
    out.push_back(run_llf(cfg, every));
  return out;
}

AlignmentReport run_alignment(const ScenarioConfig& cfg, double align_duration) {
  cfg.validate();
  const double T = cfg.nav_interval();
  if (!(align_duration > 0.0) || align_duration > cfg.duration * (1.0 + 1e-12))
    throw ConfigError("alignment duration must lie in (0, duration]");
  const double steps_exact = align_duration / T;
  const long n = std::lround(steps_exact);
  if (std::abs(steps_exact - static_cast<double>(n)) > 1e-9 * std::max(1.0, steps_exact))
    throw ConfigError("alignment duration must be a whole number of navigation intervals");
  const long gnss_every = std::lround((1.0 / T) / cfg.gnss_rate);

  AlignmentReport rep;
  rep.scenario = cfg.name;
  rep.duration = align_duration;
  rep.config = cfg;

  AlignmentAccumulator acc(cfg.earth);
  auto observe = [&](double t) {
    const GnssSample g = gnss_sample_at(t, cfg);
    acc.ingest_gnss(t, g.velocity, g.position);

    AlignmentRecord r;
    r.t = t;
    r.n_pairs = acc.observations().size();
    try {
      const AlignmentSolution sol = solve_initial_attitude(acc);
      const Dcm c_est = current_attitude(sol, acc);
      const Dcm c_true = truth_at(t, cfg).c_be;
      r.status = AlignmentStatus::kOk;
      r.quality = sol.quality;
      r.attitude_error_deg = rotation_angle(Dcm(c_true.transpose() * c_est)) * kRadToDeg;
    } catch (const InsufficientObservations&) {
      r.status = AlignmentStatus::kInsufficient;
    } catch (const DegenerateGeometry& e) {
      r.status = AlignmentStatus::kDegenerate;
      r.quality = e.quality();
    }
    rep.series.push_back(r);
  };

  observe(0.0);
  for (long k = 0; k < n; ++k) {
    acc.ingest_imu(nav_increments(k, cfg));
    if ((k + 1) % gnss_every == 0) observe(static_cast<double>(k + 1) * T);
  }
  return rep;
}

DisplayState display_transform(const EarthFrameState& s, const EarthModel& m) {
  DisplayState d;
  d.position = ecef_to_curvilinear(s.position, m);
  const Mat3 c_en = ecef_to_nue_dcm(d.position.longitude, d.position.latitude);
  d.velocity_nue = c_en * s.velocity;
  d.c_bn = c_en * quat_to_dcm(s.q_be);
  d.longitude_indeterminate = std::abs(std::cos(d.position.latitude)) < kSingularCosTolerance;
  return d;
}

}  // namespace polarnav

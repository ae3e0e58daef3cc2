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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polarnav/alignment.hpp"
#include "polarnav/strapdown.hpp"
#include "polarnav/trajgen.hpp"

namespace polarnav {

// ---------------------------------------------------------------------------
// Scenario configuration text
//
// One `key = value` per line, '#' starts a comment. Keys:
//   name, path_kind (meridian|parallel), lon0_deg, lat0_deg, h0, speed,
//   duration, imu_rate, gnss_rate, equatorial_radius, eccentricity_sq,
//   rotation_rate, gravity_magnitude
// Unknown or repeated keys are errors; omitted keys keep their defaults.
// ---------------------------------------------------------------------------

ScenarioConfig parse_scenario_config(const std::string& text);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);
std::string format_scenario_config(const ScenarioConfig& cfg);

const char* to_string(PathKind kind);

// ---------------------------------------------------------------------------
// Mechanization runs
// ---------------------------------------------------------------------------

enum class Mechanization { kEarth, kLocalLevel, kBoth };

const char* to_string(Mechanization mech);  // "earth", "llf", "both"
Mechanization parse_mechanization(const std::string& s);

struct ErrorRecord {
  double t = 0.0;
  double pos_err = 0.0;  // 3-D ECEF norm, m
  double vel_err = 0.0;  // m/s
  double lat_deg = 0.0;  // estimated position
  double lon_deg = 0.0;
  double height = 0.0;
  Vec3 pos_err_ecef = Vec3::Zero();
  bool singular = false;
};

struct RunSummary {
  double max_pos_err = 0.0;
  double final_pos_err = 0.0;
  std::optional<double> singular_at;
};

struct RunReport {
  std::string scenario;
  Mechanization mechanization = Mechanization::kEarth;
  std::vector<ErrorRecord> series;
  RunSummary summary;
  ScenarioConfig config;
};

double position_error(const EcefPosition& estimate, const EcefPosition& truth);

/// Summary recomputed from a series.
RunSummary summarize(const std::vector<ErrorRecord>& series);

/// Runs one or both mechanizations from the exact initial truth, applying
/// the zero-vertical-velocity reset after every update and recording
/// errors once per second. A SingularLatitude ends that mechanization's
/// series with a `singular` record: its time is the failing epoch and its
/// errors are those of the last valid estimate.
std::vector<RunReport> run_scenario(const ScenarioConfig& cfg, Mechanization mech);

// ---------------------------------------------------------------------------
// Alignment runs
// ---------------------------------------------------------------------------

enum class AlignmentStatus { kOk, kInsufficient, kDegenerate };

const char* to_string(AlignmentStatus status);

struct AlignmentRecord {
  double t = 0.0;
  AlignmentStatus status = AlignmentStatus::kInsufficient;
  std::optional<double> attitude_error_deg;  // angle of C_true^T C_est
  double quality = 0.0;
  std::size_t n_pairs = 0;
};

struct AlignmentReport {
  std::string scenario;
  double duration = 0.0;
  std::vector<AlignmentRecord> series;  // one per GNSS epoch, t = 0 first
  ScenarioConfig config;

  const AlignmentRecord& final() const { return series.back(); }
};

/// Feeds synthesized IMU and GNSS data for `align_duration` seconds into an
/// AlignmentAccumulator and solves at every GNSS epoch.
AlignmentReport run_alignment(const ScenarioConfig& cfg, double align_duration);

// ---------------------------------------------------------------------------
// Local-level display of an Earth-frame solution (output only)
// ---------------------------------------------------------------------------

struct DisplayState {
  CurvilinearPosition position;
  Vec3 velocity_nue = Vec3::Zero();
  Dcm c_bn = Dcm::Identity();
  bool longitude_indeterminate = false;  // |cos L| below kSingularCosTolerance
};

DisplayState display_transform(const EarthFrameState& s, const EarthModel& m);

// ---------------------------------------------------------------------------
// Output files
// ---------------------------------------------------------------------------

inline constexpr const char* kRunCsvHeader = "t_s,pos_err_m,vel_err_mps,lat_deg,lon_deg,h_m,flag";
inline constexpr const char* kAxesCsvHeader = "t_s,err_x_m,err_y_m,err_z_m";
inline constexpr const char* kAlignCsvHeader = "t_s,att_err_deg,quality,n_pairs,status";

std::string format_run_csv(const RunReport& report);
std::string format_axes_csv(const RunReport& report);
std::string format_run_summary_json(const RunReport& report);
std::string format_plot_script(const std::vector<RunReport>& reports);
std::string format_alignment_csv(const AlignmentReport& report);
std::string format_alignment_summary_json(const AlignmentReport& report);

/// Writes `<scenario>_<mech>.csv`, `<scenario>_<mech>_axes.csv`,
/// `<scenario>_<mech>_summary.json` per report plus `<scenario>.gp`.
/// Returns the written paths.
std::vector<std::filesystem::path> write_run_outputs(const std::filesystem::path& dir,
                                                     const std::vector<RunReport>& reports);

/// Writes `<scenario>_align.csv` and `<scenario>_align_summary.json`.
std::vector<std::filesystem::path> write_alignment_outputs(const std::filesystem::path& dir,
                                                           const AlignmentReport& report);

}  // namespace polarnav

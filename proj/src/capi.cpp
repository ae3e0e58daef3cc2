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

#include "polarnav/polarnav.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "polarnav/alignment.hpp"
#include "polarnav/errors.hpp"
#include "polarnav/harness.hpp"
#include "polarnav/strapdown.hpp"
#include "polarnav/trajgen.hpp"

struct pn_scenario {
  polarnav::ScenarioConfig config;
};

struct pn_run_result {
  std::vector<polarnav::RunReport> reports;
};

struct pn_align_result {
  polarnav::AlignmentReport report;
};

struct pn_aligner {
  polarnav::AlignmentAccumulator acc;
};

namespace {

using namespace polarnav;

thread_local std::string g_last_error;

pn_status fail(pn_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
pn_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return PN_OK;
  } catch (const SingularLatitude& e) {
    return fail(PN_ERR_SINGULAR_LATITUDE, e.what());
  } catch (const InsufficientObservations& e) {
    return fail(PN_ERR_INSUFFICIENT_OBSERVATIONS, e.what());
  } catch (const DegenerateGeometry& e) {
    return fail(PN_ERR_DEGENERATE_GEOMETRY, e.what());
  } catch (const ConfigError& e) {
    return fail(PN_ERR_CONFIG, e.what());
  } catch (const DomainError& e) {
    return fail(PN_ERR_DOMAIN, e.what());
  } catch (const IoError& e) {
    return fail(PN_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PN_ERR_INTERNAL, "unknown error");
  }
}

#define PN_REQUIRE(cond)                                                  \
  do {                                                                    \
    if (!(cond)) return fail(PN_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

Vec3 vec(const double a[3]) { return {a[0], a[1], a[2]}; }

void put(const Vec3& v, double out[3]) {
  out[0] = v.x();
  out[1] = v.y();
  out[2] = v.z();
}

void put(const Quaternion& q, double out[4]) {
  out[0] = q.scalar();
  out[1] = q.vector().x();
  out[2] = q.vector().y();
  out[3] = q.vector().z();
}

Quaternion quat(const double q[4]) { return {q[0], q[1], q[2], q[3]}; }

EarthModel model(const pn_earth_model& m) {
  EarthModel e;
  e.equatorial_radius = m.equatorial_radius;
  e.eccentricity_sq = m.eccentricity_sq;
  e.rotation_rate = m.rotation_rate;
  e.gravity_magnitude = m.gravity_magnitude;
  e.validate();
  return e;
}

pn_earth_model to_c(const EarthModel& e) {
  return {e.equatorial_radius, e.eccentricity_sq, e.rotation_rate, e.gravity_magnitude};
}

ImuIncrements increments(const pn_imu_increments& c) {
  if (!(c.interval > 0.0)) throw DomainError("increment interval must be positive");
  return {vec(c.dtheta1), vec(c.dtheta2), vec(c.dv1), vec(c.dv2), c.interval};
}

void to_c(const ImuIncrements& inc, pn_imu_increments& out) {
  put(inc.dtheta1, out.dtheta1);
  put(inc.dtheta2, out.dtheta2);
  put(inc.dv1, out.dv1);
  put(inc.dv2, out.dv2);
  out.interval = inc.interval;
}

EarthFrameState from_c(const pn_earth_state& c) {
  EarthFrameState s;
  s.q_be = quat(c.q_be);
  s.velocity = vec(c.velocity);
  s.position = EcefPosition::from(vec(c.position));
  s.time = c.time;
  return s;
}

void to_c(const EarthFrameState& s, pn_earth_state& out) {
  put(s.q_be, out.q_be);
  put(s.velocity, out.velocity);
  put(s.position.vec(), out.position);
  out.time = s.time;
}

LocalLevelState from_c(const pn_llf_state& c) {
  LocalLevelState s;
  s.q_bn = quat(c.q_bn);
  s.velocity = vec(c.velocity);
  s.position = {c.longitude, c.latitude, c.height};
  s.time = c.time;
  return s;
}

void to_c(const LocalLevelState& s, pn_llf_state& out) {
  put(s.q_bn, out.q_bn);
  put(s.velocity, out.velocity);
  out.longitude = s.position.longitude;
  out.latitude = s.position.latitude;
  out.height = s.position.height;
  out.time = s.time;
}

pn_status make_scenario(ScenarioConfig cfg, pn_scenario** out) {
  *out = new pn_scenario{std::move(cfg)};
  return PN_OK;
}

}  // namespace

extern "C" {

const char* pn_version(void) { return "1.0.0"; }

const char* pn_status_string(pn_status status) {
  switch (status) {
    case PN_OK: return "ok";
    case PN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PN_ERR_CONFIG: return "configuration error";
    case PN_ERR_DOMAIN: return "domain error";
    case PN_ERR_SINGULAR_LATITUDE: return "singular latitude";
    case PN_ERR_INSUFFICIENT_OBSERVATIONS: return "insufficient observations";
    case PN_ERR_DEGENERATE_GEOMETRY: return "degenerate geometry";
    case PN_ERR_IO: return "i/o error";
    case PN_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PN_ERR_OUT_OF_RANGE: return "index out of range";
    case PN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pn_last_error(void) { return g_last_error.c_str(); }

void pn_earth_model_default(pn_earth_model* out) {
  if (out) *out = to_c(EarthModel{});
}

pn_status pn_curvilinear_to_ecef(const double lon_lat_h[3], const pn_earth_model* m, double xyz[3]) {
  PN_REQUIRE(lon_lat_h && m && xyz);
  return guarded([&] {
    const EcefPosition p = curvilinear_to_ecef({lon_lat_h[0], lon_lat_h[1], lon_lat_h[2]}, model(*m));
    put(p.vec(), xyz);
  });
}

pn_status pn_ecef_to_curvilinear(const double xyz[3], const pn_earth_model* m, double lon_lat_h[3]) {
  PN_REQUIRE(xyz && m && lon_lat_h);
  return guarded([&] {
    const CurvilinearPosition p = ecef_to_curvilinear(EcefPosition::from(vec(xyz)), model(*m));
    lon_lat_h[0] = p.longitude;
    lon_lat_h[1] = p.latitude;
    lon_lat_h[2] = p.height;
  });
}

pn_status pn_gravity_ecef(const double xyz[3], const pn_earth_model* m, double g[3]) {
  PN_REQUIRE(xyz && m && g);
  return guarded([&] { put(gravity_ecef(EcefPosition::from(vec(xyz)), model(*m)), g); });
}

pn_status pn_earth_frame_step(const pn_earth_state* state, const pn_imu_increments* inc,
                              const pn_earth_model* m, pn_earth_state* out) {
  PN_REQUIRE(state && inc && m && out);
  return guarded([&] { to_c(earth_frame_step(from_c(*state), increments(*inc), model(*m)), *out); });
}

pn_status pn_local_level_step(const pn_llf_state* state, const pn_imu_increments* inc,
                              const pn_earth_model* m, pn_llf_state* out) {
  PN_REQUIRE(state && inc && m && out);
  return guarded([&] { to_c(local_level_step(from_c(*state), increments(*inc), model(*m)), *out); });
}

pn_status pn_vertical_reset_earth(const pn_earth_state* state, const pn_earth_model* m,
                                  pn_earth_state* out) {
  PN_REQUIRE(state && m && out);
  return guarded([&] { to_c(vertical_reset_earth(from_c(*state), model(*m)), *out); });
}

pn_status pn_vertical_reset_llf(const pn_llf_state* state, pn_llf_state* out) {
  PN_REQUIRE(state && out);
  return guarded([&] { to_c(vertical_reset_llf(from_c(*state)), *out); });
}

pn_status pn_scenario_builtin(const char* name, pn_scenario** out) {
  PN_REQUIRE(name && out);
  *out = nullptr;
  return guarded([&] {
    const std::string n(name);
    if (n == "south") {
      make_scenario(builtin_scenario_south(), out);
    } else if (n == "north") {
      make_scenario(builtin_scenario_north(), out);
    } else {
      throw ConfigError("unknown built-in scenario '" + n + "' (expected south or north)");
    }
  });
}

pn_status pn_scenario_parse(const char* text, pn_scenario** out) {
  PN_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { make_scenario(parse_scenario_config(text), out); });
}

pn_status pn_scenario_load(const char* path, pn_scenario** out) {
  PN_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { make_scenario(load_scenario_config(path), out); });
}

void pn_scenario_destroy(pn_scenario* scenario) { delete scenario; }

pn_status pn_scenario_format(const pn_scenario* scenario, char* buf, size_t capacity,
                             size_t* needed) {
  PN_REQUIRE(scenario && (buf || capacity == 0));
  std::string text;
  const pn_status st = guarded([&] { text = format_scenario_config(scenario->config); });
  if (st != PN_OK) return st;
  if (needed) *needed = text.size() + 1;
  if (capacity < text.size() + 1) return fail(PN_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return PN_OK;
}

pn_status pn_scenario_nav_steps(const pn_scenario* scenario, long* steps) {
  PN_REQUIRE(scenario && steps);
  *steps = scenario->config.nav_steps();
  return PN_OK;
}

pn_status pn_scenario_earth_model(const pn_scenario* scenario, pn_earth_model* out) {
  PN_REQUIRE(scenario && out);
  *out = to_c(scenario->config.earth);
  return PN_OK;
}

pn_status pn_scenario_truth(const pn_scenario* scenario, double t, pn_truth_sample* out) {
  PN_REQUIRE(scenario && out);
  return guarded([&] {
    const TruthSample s = truth_at(t, scenario->config);
    out->t = s.t;
    out->longitude = s.curvilinear.longitude;
    out->latitude = s.curvilinear.latitude;
    out->height = s.curvilinear.height;
    put(s.ecef.vec(), out->position);
    put(s.velocity, out->velocity);
  });
}

pn_status pn_scenario_increments(const pn_scenario* scenario, long k, pn_imu_increments* out) {
  PN_REQUIRE(scenario && out);
  if (k < 0 || k >= scenario->config.nav_steps())
    return fail(PN_ERR_OUT_OF_RANGE, "navigation interval index out of range");
  return guarded([&] { to_c(nav_increments(k, scenario->config), *out); });
}

pn_status pn_scenario_initial_earth_state(const pn_scenario* scenario, pn_earth_state* out) {
  PN_REQUIRE(scenario && out);
  return guarded([&] { to_c(initial_earth_state(scenario->config), *out); });
}

pn_status pn_scenario_initial_llf_state(const pn_scenario* scenario, pn_llf_state* out) {
  PN_REQUIRE(scenario && out);
  return guarded([&] { to_c(initial_local_level_state(scenario->config), *out); });
}

pn_status pn_run(const pn_scenario* scenario, pn_mechanization mech, pn_run_result** out) {
  PN_REQUIRE(scenario && out);
  *out = nullptr;
  if (mech != PN_MECH_EARTH && mech != PN_MECH_LLF && mech != PN_MECH_BOTH)
    return fail(PN_ERR_INVALID_ARGUMENT, "unknown mechanization");
  return guarded([&] {
    const Mechanization m = mech == PN_MECH_EARTH ? Mechanization::kEarth
                            : mech == PN_MECH_LLF ? Mechanization::kLocalLevel
                                                  : Mechanization::kBoth;
    auto result = std::make_unique<pn_run_result>();
    result->reports = run_scenario(scenario->config, m);
    *out = result.release();
  });
}

size_t pn_run_result_count(const pn_run_result* result) {
  return result ? result->reports.size() : 0;
}

pn_status pn_run_result_summary(const pn_run_result* result, size_t index, pn_run_summary* out) {
  PN_REQUIRE(result && out);
  if (index >= result->reports.size()) return fail(PN_ERR_OUT_OF_RANGE, "report index out of range");
  const RunReport& r = result->reports[index];
  out->mechanization = r.mechanization == Mechanization::kEarth ? PN_MECH_EARTH : PN_MECH_LLF;
  out->max_pos_err_m = r.summary.max_pos_err;
  out->final_pos_err_m = r.summary.final_pos_err;
  out->singular = r.summary.singular_at ? 1 : 0;
  out->singular_at_s = r.summary.singular_at.value_or(0.0);
  out->n_records = r.series.size();
  return PN_OK;
}

pn_status pn_run_result_record(const pn_run_result* result, size_t index, size_t record,
                               pn_error_record* out) {
  PN_REQUIRE(result && out);
  if (index >= result->reports.size() || record >= result->reports[index].series.size())
    return fail(PN_ERR_OUT_OF_RANGE, "record index out of range");
  const ErrorRecord& r = result->reports[index].series[record];
  out->t_s = r.t;
  out->pos_err_m = r.pos_err;
  out->vel_err_mps = r.vel_err;
  out->lat_deg = r.lat_deg;
  out->lon_deg = r.lon_deg;
  out->h_m = r.height;
  put(r.pos_err_ecef, out->pos_err_ecef);
  out->singular = r.singular ? 1 : 0;
  return PN_OK;
}

pn_status pn_run_result_write(const pn_run_result* result, const char* out_dir) {
  PN_REQUIRE(result && out_dir);
  return guarded([&] { write_run_outputs(out_dir, result->reports); });
}

void pn_run_result_destroy(pn_run_result* result) { delete result; }

pn_status pn_align(const pn_scenario* scenario, double duration_s, pn_align_result** out) {
  PN_REQUIRE(scenario && out);
  *out = nullptr;
  return guarded([&] {
    auto result = std::make_unique<pn_align_result>();
    result->report = run_alignment(scenario->config, duration_s);
    *out = result.release();
  });
}

size_t pn_align_result_count(const pn_align_result* result) {
  return result ? result->report.series.size() : 0;
}

pn_status pn_align_result_record(const pn_align_result* result, size_t index, pn_align_record* out) {
  PN_REQUIRE(result && out);
  if (index >= result->report.series.size())
    return fail(PN_ERR_OUT_OF_RANGE, "record index out of range");
  const AlignmentRecord& r = result->report.series[index];
  out->t_s = r.t;
  out->status = r.status == AlignmentStatus::kOk             ? PN_ALIGN_OK
                : r.status == AlignmentStatus::kInsufficient ? PN_ALIGN_INSUFFICIENT
                                                             : PN_ALIGN_DEGENERATE;
  out->has_attitude_error = r.attitude_error_deg ? 1 : 0;
  out->attitude_error_deg = r.attitude_error_deg.value_or(0.0);
  out->quality = r.quality;
  out->n_pairs = r.n_pairs;
  return PN_OK;
}

pn_status pn_align_result_write(const pn_align_result* result, const char* out_dir) {
  PN_REQUIRE(result && out_dir);
  return guarded([&] { write_alignment_outputs(out_dir, result->report); });
}

void pn_align_result_destroy(pn_align_result* result) { delete result; }

pn_status pn_aligner_create(const pn_earth_model* m, pn_aligner** out) {
  PN_REQUIRE(m && out);
  *out = nullptr;
  return guarded([&] { *out = new pn_aligner{AlignmentAccumulator(model(*m))}; });
}

void pn_aligner_destroy(pn_aligner* aligner) { delete aligner; }

pn_status pn_aligner_ingest_imu(pn_aligner* aligner, const pn_imu_increments* inc) {
  PN_REQUIRE(aligner && inc);
  return guarded([&] { aligner->acc.ingest_imu(increments(*inc)); });
}

pn_status pn_aligner_ingest_gnss(pn_aligner* aligner, double t, const double velocity[3],
                                 const double position[3], int* pair_added) {
  PN_REQUIRE(aligner && velocity && position);
  return guarded([&] {
    const auto pair = aligner->acc.ingest_gnss(t, vec(velocity), EcefPosition::from(vec(position)));
    if (pair_added) *pair_added = pair ? 1 : 0;
  });
}

pn_status pn_aligner_solve(const pn_aligner* aligner, double q_be0[4], double* quality,
                           size_t* n_pairs) {
  PN_REQUIRE(aligner && q_be0);
  if (n_pairs) *n_pairs = aligner->acc.observations().size();
  return guarded([&] {
    try {
      const AlignmentSolution sol = solve_initial_attitude(aligner->acc);
      put(sol.q_be0, q_be0);
      if (quality) *quality = sol.quality;
    } catch (const DegenerateGeometry& e) {
      if (quality) *quality = e.quality();
      throw;
    }
  });
}

pn_status pn_aligner_current_attitude(const pn_aligner* aligner, double c_be[9]) {
  PN_REQUIRE(aligner && c_be);
  return guarded([&] {
    const Dcm c = current_attitude(solve_initial_attitude(aligner->acc), aligner->acc);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c_be[3 * i + j] = c(i, j);
  });
}

}  // extern "C"

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

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "polarnav/polarnav.h"

namespace {

struct ScenarioHandle {
  pn_scenario* p = nullptr;
  ~ScenarioHandle() { pn_scenario_destroy(p); }
};

pn_earth_model default_model() {
  pn_earth_model m;
  pn_earth_model_default(&m);
  return m;
}

const char* kShortNorth =
    "name = capi\n"
    "lon0_deg = 120\n"
    "lat0_deg = 50\n"
    "h0 = 10000\n"
    "speed = 2000\n"
    "duration = 10\n";

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(pn_version(), "1.0.0");
  EXPECT_STREQ(pn_status_string(PN_OK), "ok");
  for (pn_status s : {PN_ERR_INVALID_ARGUMENT, PN_ERR_CONFIG, PN_ERR_DOMAIN, PN_ERR_SINGULAR_LATITUDE,
                      PN_ERR_INSUFFICIENT_OBSERVATIONS, PN_ERR_DEGENERATE_GEOMETRY, PN_ERR_IO,
                      PN_ERR_BUFFER_TOO_SMALL, PN_ERR_OUT_OF_RANGE, PN_ERR_INTERNAL})
    EXPECT_GT(std::strlen(pn_status_string(s)), 0u);
}

TEST(CApi, Geodesy) {
  const pn_earth_model m = default_model();
  EXPECT_EQ(m.equatorial_radius, 6378137.0);
  EXPECT_EQ(m.rotation_rate, 7.292115e-5);
  const double llh[3] = {120.0 * M_PI / 180.0, 50.0 * M_PI / 180.0, 10000.0};
  double xyz[3], back[3], g[3];
  ASSERT_EQ(pn_curvilinear_to_ecef(llh, &m, xyz), PN_OK);
  EXPECT_NEAR(xyz[0], -2053107.656290070136, 1e-6);
  EXPECT_NEAR(xyz[1], 3556086.774103060932, 1e-6);
  EXPECT_NEAR(xyz[2], 4893596.850732738989, 1e-6);
  ASSERT_EQ(pn_ecef_to_curvilinear(xyz, &m, back), PN_OK);
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(back[i], llh[i], 1e-14);
  EXPECT_NEAR(back[2], llh[2], 1e-6);
  ASSERT_EQ(pn_gravity_ecef(xyz, &m, g), PN_OK);
  EXPECT_NEAR(std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]), 9.80665, 1e-12);

  EXPECT_EQ(pn_curvilinear_to_ecef(nullptr, &m, xyz), PN_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(pn_last_error()), "");
  const double origin[3] = {0, 0, 0};
  EXPECT_EQ(pn_gravity_ecef(origin, &m, g), PN_ERR_DOMAIN);
  pn_earth_model bad = m;
  bad.equatorial_radius = -1.0;
  EXPECT_EQ(pn_curvilinear_to_ecef(llh, &bad, xyz), PN_ERR_DOMAIN);
}

TEST(CApi, SteppingMatchesScenarioTruth) {
  ScenarioHandle sc;
  ASSERT_EQ(pn_scenario_builtin("north", &sc.p), PN_OK);
  pn_earth_model m;
  ASSERT_EQ(pn_scenario_earth_model(sc.p, &m), PN_OK);
  long steps = 0;
  ASSERT_EQ(pn_scenario_nav_steps(sc.p, &steps), PN_OK);
  EXPECT_EQ(steps, 270000);

  pn_earth_state e;
  pn_llf_state l;
  ASSERT_EQ(pn_scenario_initial_earth_state(sc.p, &e), PN_OK);
  ASSERT_EQ(pn_scenario_initial_llf_state(sc.p, &l), PN_OK);
  EXPECT_NEAR(l.velocity[0], 2000.0, 1e-9);
  for (long k = 0; k < 500; ++k) {
    pn_imu_increments inc;
    ASSERT_EQ(pn_scenario_increments(sc.p, k, &inc), PN_OK);
    ASSERT_EQ(pn_earth_frame_step(&e, &inc, &m, &e), PN_OK);
    ASSERT_EQ(pn_vertical_reset_earth(&e, &m, &e), PN_OK);
    ASSERT_EQ(pn_local_level_step(&l, &inc, &m, &l), PN_OK);
    ASSERT_EQ(pn_vertical_reset_llf(&l, &l), PN_OK);
  }
  EXPECT_EQ(l.velocity[1], 0.0);
  pn_truth_sample truth;
  ASSERT_EQ(pn_scenario_truth(sc.p, e.time, &truth), PN_OK);
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d += std::pow(e.position[i] - truth.position[i], 2);
  EXPECT_LT(std::sqrt(d), 0.1);
  EXPECT_NEAR(l.latitude, truth.latitude, 1e-7);
  EXPECT_EQ(pn_scenario_truth(sc.p, -5.0, &truth), PN_ERR_DOMAIN);
}

TEST(CApi, SingularLatitudeIsReported) {
  const pn_earth_model m = default_model();
  pn_llf_state s{};
  s.q_bn[0] = 1.0;
  s.latitude = M_PI / 2.0;
  pn_imu_increments inc{};
  inc.interval = 0.02;
  pn_llf_state out{};
  out.time = 42.0;
  EXPECT_EQ(pn_local_level_step(&s, &inc, &m, &out), PN_ERR_SINGULAR_LATITUDE);
  EXPECT_EQ(out.time, 42.0);
}

TEST(CApi, ScenarioTextAndErrors) {
  ScenarioHandle sc;
  ASSERT_EQ(pn_scenario_parse(kShortNorth, &sc.p), PN_OK);
  size_t needed = 0;
  EXPECT_EQ(pn_scenario_format(sc.p, nullptr, 0, &needed), PN_ERR_BUFFER_TOO_SMALL);
  ASSERT_GT(needed, 1u);
  std::vector<char> buf(needed);
  ASSERT_EQ(pn_scenario_format(sc.p, buf.data(), buf.size(), &needed), PN_OK);
  EXPECT_NE(std::string(buf.data()).find("name = capi"), std::string::npos);

  pn_scenario* other = nullptr;
  EXPECT_EQ(pn_scenario_parse("bogus = 1\n", &other), PN_ERR_CONFIG);
  EXPECT_EQ(other, nullptr);
  EXPECT_NE(std::string(pn_last_error()).find("bogus"), std::string::npos);
  EXPECT_EQ(pn_scenario_builtin("east", &other), PN_ERR_CONFIG);
  EXPECT_EQ(pn_scenario_load("/nonexistent.cfg", &other), PN_ERR_CONFIG);
  EXPECT_EQ(pn_scenario_parse(nullptr, &other), PN_ERR_INVALID_ARGUMENT);
  pn_scenario_destroy(nullptr);
}

TEST(CApi, RunAndWrite) {
  ScenarioHandle sc;
  ASSERT_EQ(pn_scenario_parse(kShortNorth, &sc.p), PN_OK);
  pn_run_result* run = nullptr;
  ASSERT_EQ(pn_run(sc.p, PN_MECH_BOTH, &run), PN_OK);
  ASSERT_EQ(pn_run_result_count(run), 2u);
  pn_run_summary s;
  ASSERT_EQ(pn_run_result_summary(run, 1, &s), PN_OK);
  EXPECT_EQ(s.mechanization, PN_MECH_LLF);
  EXPECT_EQ(s.n_records, 11u);
  EXPECT_EQ(s.singular, 0);
  pn_error_record r;
  ASSERT_EQ(pn_run_result_record(run, 0, 10, &r), PN_OK);
  EXPECT_NEAR(r.t_s, 10.0, 1e-9);
  EXPECT_LT(r.pos_err_m, 1.0);
  EXPECT_EQ(pn_run_result_record(run, 0, 11, &r), PN_ERR_OUT_OF_RANGE);
  EXPECT_EQ(pn_run_result_summary(run, 2, &s), PN_ERR_OUT_OF_RANGE);

  const auto dir = std::filesystem::temp_directory_path() / "polarnav_capi_test";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(pn_run_result_write(run, dir.c_str()), PN_OK);
  EXPECT_TRUE(std::filesystem::exists(dir / "capi_earth.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "capi.gp"));
  EXPECT_EQ(pn_run_result_write(run, "/proc/polarnav_no_such_dir"), PN_ERR_IO);
  std::filesystem::remove_all(dir);
  pn_run_result_destroy(run);
  EXPECT_EQ(pn_run_result_count(nullptr), 0u);
}

TEST(CApi, AlignmentReport) {
  ScenarioHandle sc;
  ASSERT_EQ(pn_scenario_parse("name = ring\npath_kind = parallel\nlat0_deg = 89.5\n"
                              "h0 = 10000\nspeed = 2000\nduration = 300\n",
                              &sc.p),
            PN_OK);
  pn_align_result* res = nullptr;
  ASSERT_EQ(pn_align(sc.p, 30.0, &res), PN_OK);
  ASSERT_EQ(pn_align_result_count(res), 31u);
  pn_align_record rec;
  ASSERT_EQ(pn_align_result_record(res, 0, &rec), PN_OK);
  EXPECT_EQ(rec.status, PN_ALIGN_INSUFFICIENT);
  EXPECT_EQ(rec.has_attitude_error, 0);
  ASSERT_EQ(pn_align_result_record(res, 30, &rec), PN_OK);
  EXPECT_EQ(rec.status, PN_ALIGN_OK);
  EXPECT_LT(rec.attitude_error_deg, 0.01);
  EXPECT_EQ(pn_align_result_record(res, 31, &rec), PN_ERR_OUT_OF_RANGE);
  const auto dir = std::filesystem::temp_directory_path() / "polarnav_capi_align";
  ASSERT_EQ(pn_align_result_write(res, dir.c_str()), PN_OK);
  EXPECT_TRUE(std::filesystem::exists(dir / "ring_align.csv"));
  std::filesystem::remove_all(dir);
  pn_align_result_destroy(res);

  pn_align_result* bad = nullptr;
  EXPECT_EQ(pn_align(sc.p, 1000.0, &bad), PN_ERR_CONFIG);
}

TEST(CApi, IncrementalAligner) {
  const pn_earth_model m = default_model();
  pn_aligner* a = nullptr;
  ASSERT_EQ(pn_aligner_create(&m, &a), PN_OK);
  double q[4], quality = -1.0;
  size_t n = 99;
  EXPECT_EQ(pn_aligner_solve(a, q, &quality, &n), PN_ERR_INSUFFICIENT_OBSERVATIONS);

  const double v0[3] = {0, 0, 0};
  const double p[3] = {0, 0, 6378137.0};
  int added = -1;
  ASSERT_EQ(pn_aligner_ingest_gnss(a, 0.0, v0, p, &added), PN_OK);
  EXPECT_EQ(added, 0);
  // A stationary body at the pole only ever sees gravity: one direction.
  pn_imu_increments inc{};
  inc.dtheta1[2] = inc.dtheta2[2] = m.rotation_rate * 0.5;
  inc.dv1[2] = inc.dv2[2] = m.gravity_magnitude * 0.5;
  inc.interval = 1.0;
  for (int i = 1; i <= 5; ++i) {
    ASSERT_EQ(pn_aligner_ingest_imu(a, &inc), PN_OK);
    ASSERT_EQ(pn_aligner_ingest_gnss(a, i, v0, p, &added), PN_OK);
    EXPECT_EQ(added, 1);
  }
  EXPECT_EQ(pn_aligner_solve(a, q, &quality, &n), PN_ERR_DEGENERATE_GEOMETRY);
  EXPECT_LT(quality, 1e-3);
  EXPECT_EQ(n, 5u);
  EXPECT_EQ(pn_aligner_ingest_gnss(a, 2.0, v0, p, nullptr), PN_ERR_DOMAIN);
  double c[9];
  EXPECT_EQ(pn_aligner_current_attitude(a, c), PN_ERR_DEGENERATE_GEOMETRY);
  EXPECT_EQ(pn_aligner_ingest_imu(nullptr, &inc), PN_ERR_INVALID_ARGUMENT);
  pn_aligner_destroy(a);
  pn_aligner_destroy(nullptr);
}

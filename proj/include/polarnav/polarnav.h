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

/*
 * polarnav C API.
 *
 * Every function returning pn_status reports failures through the return
 * code; a human-readable message for the most recent failure on the calling
 * thread is available from pn_last_error(). Handles are opaque and owned by
 * the caller once created; release them with the matching *_destroy call
 * (passing NULL is allowed). Handles are not synchronized: share one
 * between threads only with external locking.
 *
 * Angles are radians unless a name ends in _deg. Quaternions are scalar
 * first [s, x, y, z]. 3x3 matrices are row-major double[9].
 */

#ifndef POLARNAV_POLARNAV_H
#define POLARNAV_POLARNAV_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(POLARNAV_BUILDING)
#    define PN_API __declspec(dllexport)
#  else
#    define PN_API __declspec(dllimport)
#  endif
#else
#  define PN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pn_status {
  PN_OK = 0,
  PN_ERR_INVALID_ARGUMENT = 1,
  PN_ERR_CONFIG = 2,
  PN_ERR_DOMAIN = 3,
  PN_ERR_SINGULAR_LATITUDE = 4,
  PN_ERR_INSUFFICIENT_OBSERVATIONS = 5,
  PN_ERR_DEGENERATE_GEOMETRY = 6,
  PN_ERR_IO = 7,
  PN_ERR_BUFFER_TOO_SMALL = 8,
  PN_ERR_OUT_OF_RANGE = 9,
  PN_ERR_INTERNAL = 99
} pn_status;

typedef enum pn_mechanization {
  PN_MECH_EARTH = 0,
  PN_MECH_LLF = 1,
  PN_MECH_BOTH = 2
} pn_mechanization;

typedef enum pn_align_status {
  PN_ALIGN_OK = 0,
  PN_ALIGN_INSUFFICIENT = 1,
  PN_ALIGN_DEGENERATE = 2
} pn_align_status;

PN_API const char* pn_version(void);
PN_API const char* pn_status_string(pn_status status);
/* Message of the last failed call on this thread ("" if none). */
PN_API const char* pn_last_error(void);

/* ---------------------------------------------------------------- model */

typedef struct pn_earth_model {
  double equatorial_radius; /* m */
  double eccentricity_sq;
  double rotation_rate;     /* rad/s */
  double gravity_magnitude; /* m/s^2 */
} pn_earth_model;

PN_API void pn_earth_model_default(pn_earth_model* out);

/* lon_lat_h = {longitude, latitude, height} */
PN_API pn_status pn_curvilinear_to_ecef(const double lon_lat_h[3], const pn_earth_model* model,
                                        double xyz[3]);
PN_API pn_status pn_ecef_to_curvilinear(const double xyz[3], const pn_earth_model* model,
                                        double lon_lat_h[3]);
PN_API pn_status pn_gravity_ecef(const double xyz[3], const pn_earth_model* model, double g[3]);

/* ------------------------------------------------------------ stepping */

typedef struct pn_imu_increments {
  double dtheta1[3]; /* rad */
  double dtheta2[3];
  double dv1[3];     /* m/s */
  double dv2[3];
  double interval;   /* s, both sub-samples together */
} pn_imu_increments;

typedef struct pn_earth_state {
  double q_be[4];
  double velocity[3]; /* ECEF, m/s */
  double position[3]; /* ECEF, m */
  double time;
} pn_earth_state;

typedef struct pn_llf_state {
  double q_bn[4];
  double velocity[3]; /* North, Up, East */
  double longitude;
  double latitude;
  double height;
  double time;
} pn_llf_state;

PN_API pn_status pn_earth_frame_step(const pn_earth_state* state, const pn_imu_increments* inc,
                                     const pn_earth_model* model, pn_earth_state* out);
/* Returns PN_ERR_SINGULAR_LATITUDE near the poles; *out is untouched then. */
PN_API pn_status pn_local_level_step(const pn_llf_state* state, const pn_imu_increments* inc,
                                     const pn_earth_model* model, pn_llf_state* out);
PN_API pn_status pn_vertical_reset_earth(const pn_earth_state* state, const pn_earth_model* model,
                                         pn_earth_state* out);
PN_API pn_status pn_vertical_reset_llf(const pn_llf_state* state, pn_llf_state* out);

/* ------------------------------------------------------------ scenario */

typedef struct pn_scenario pn_scenario;

typedef struct pn_truth_sample {
  double t;
  double longitude;
  double latitude;
  double height;
  double position[3]; /* ECEF */
  double velocity[3]; /* ECEF */
} pn_truth_sample;

/* name: "south" (1 h southward) or "north" (1.5 h over the north pole). */
PN_API pn_status pn_scenario_builtin(const char* name, pn_scenario** out);
PN_API pn_status pn_scenario_parse(const char* text, pn_scenario** out);
PN_API pn_status pn_scenario_load(const char* path, pn_scenario** out);
PN_API void pn_scenario_destroy(pn_scenario* scenario);

/* Writes the config text (NUL-terminated) into buf. *needed receives the
   required size including the terminator; PN_ERR_BUFFER_TOO_SMALL if
   capacity is short. buf may be NULL when capacity is 0. */
PN_API pn_status pn_scenario_format(const pn_scenario* scenario, char* buf, size_t capacity,
                                    size_t* needed);
PN_API pn_status pn_scenario_nav_steps(const pn_scenario* scenario, long* steps);
PN_API pn_status pn_scenario_earth_model(const pn_scenario* scenario, pn_earth_model* out);
PN_API pn_status pn_scenario_truth(const pn_scenario* scenario, double t, pn_truth_sample* out);
/* Perfect-sensor increments for navigation interval k. */
PN_API pn_status pn_scenario_increments(const pn_scenario* scenario, long k,
                                        pn_imu_increments* out);
PN_API pn_status pn_scenario_initial_earth_state(const pn_scenario* scenario, pn_earth_state* out);
PN_API pn_status pn_scenario_initial_llf_state(const pn_scenario* scenario, pn_llf_state* out);

/* ---------------------------------------------------------------- runs */

typedef struct pn_run_result pn_run_result;

typedef struct pn_run_summary {
  pn_mechanization mechanization;
  double max_pos_err_m;
  double final_pos_err_m;
  int singular;          /* nonzero if the run hit a singular latitude */
  double singular_at_s;  /* valid when singular != 0 */
  size_t n_records;
} pn_run_summary;

typedef struct pn_error_record {
  double t_s;
  double pos_err_m;
  double vel_err_mps;
  double lat_deg;
  double lon_deg;
  double h_m;
  double pos_err_ecef[3];
  int singular;
} pn_error_record;

PN_API pn_status pn_run(const pn_scenario* scenario, pn_mechanization mech, pn_run_result** out);
PN_API size_t pn_run_result_count(const pn_run_result* result);
PN_API pn_status pn_run_result_summary(const pn_run_result* result, size_t index,
                                       pn_run_summary* out);
PN_API pn_status pn_run_result_record(const pn_run_result* result, size_t index, size_t record,
                                      pn_error_record* out);
/* CSV, per-axis CSV, summary JSON per mechanization and a gnuplot script. */
PN_API pn_status pn_run_result_write(const pn_run_result* result, const char* out_dir);
PN_API void pn_run_result_destroy(pn_run_result* result);

/* ----------------------------------------------------------- alignment */

typedef struct pn_align_result pn_align_result;

typedef struct pn_align_record {
  double t_s;
  pn_align_status status;
  int has_attitude_error;
  double attitude_error_deg;
  double quality;
  size_t n_pairs;
} pn_align_record;

PN_API pn_status pn_align(const pn_scenario* scenario, double duration_s, pn_align_result** out);
PN_API size_t pn_align_result_count(const pn_align_result* result);
PN_API pn_status pn_align_result_record(const pn_align_result* result, size_t index,
                                        pn_align_record* out);
PN_API pn_status pn_align_result_write(const pn_align_result* result, const char* out_dir);
PN_API void pn_align_result_destroy(pn_align_result* result);

/* Incremental aligner for callers that bring their own data. */
typedef struct pn_aligner pn_aligner;

PN_API pn_status pn_aligner_create(const pn_earth_model* model, pn_aligner** out);
PN_API void pn_aligner_destroy(pn_aligner* aligner);
PN_API pn_status pn_aligner_ingest_imu(pn_aligner* aligner, const pn_imu_increments* inc);
/* *pair_added (optional) is set to 1 when the epoch produced an observation. */
PN_API pn_status pn_aligner_ingest_gnss(pn_aligner* aligner, double t, const double velocity[3],
                                        const double position[3], int* pair_added);
/* quality and n_pairs are optional. On PN_ERR_DEGENERATE_GEOMETRY the
   quality is still reported. */
PN_API pn_status pn_aligner_solve(const pn_aligner* aligner, double q_be0[4], double* quality,
                                  size_t* n_pairs);
/* C_b^e at the aligner's current epoch. */
PN_API pn_status pn_aligner_current_attitude(const pn_aligner* aligner, double c_be[9]);

#ifdef __cplusplus
}
#endif

#endif /* POLARNAV_POLARNAV_H */

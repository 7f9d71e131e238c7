// Copyright 2026 The cvforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to the cvforge library. All objects are opaque handles owned by
// the caller and released with the matching *_free function. Every fallible
// call returns a cvf_status; on failure a message is available from
// cvf_last_error() on the calling thread until the next failing call there.

#ifndef CVFORGE_CVFORGE_H_
#define CVFORGE_CVFORGE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CVF_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CVF_API __attribute__((visibility("default")))
#else
#define CVF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvf_status {
  CVF_OK = 0,
  CVF_ERR_INVALID_DIMENSION = 1,
  CVF_ERR_INVALID_PARAMETER = 2,
  CVF_ERR_TRUNCATION_RISK = 3,
  CVF_ERR_DIMENSION_MISMATCH = 4,
  CVF_ERR_ZERO_PROBABILITY = 5,
  CVF_ERR_LIFECYCLE = 6,
  CVF_ERR_CONFIG = 7,
  CVF_ERR_COMPATIBILITY = 8,
  CVF_ERR_IO = 9,
  CVF_ERR_NUMERIC = 10,
  CVF_ERR_NULL_ARGUMENT = 11,
  CVF_ERR_BUFFER_TOO_SMALL = 12,
  CVF_ERR_INTERNAL = 13
} cvf_status;

CVF_API const char *cvf_version(void);
CVF_API const char *cvf_status_name(cvf_status status);
CVF_API const char *cvf_last_error(void);

// Process exit code for a status: 0 ok, 2 config, 3 compatibility or
// dimension mismatch, 4 I/O, 1 otherwise.
CVF_API int cvf_exit_code(cvf_status status);

// ---------------------------------------------------------------------------
// Single-mode states

typedef struct cvf_state cvf_state;

CVF_API cvf_status cvf_state_squeezed_vacuum(double r, int dim, int pad, cvf_state **out);
CVF_API cvf_status cvf_state_cubic_target(double gamma, double r, double alpha_re, double alpha_im,
                                          int dim, int pad, cvf_state **out);
// Versioned JSON document {"version":1,"dim":N,"re":...,"im":...}.
CVF_API cvf_status cvf_state_from_json(const char *text, cvf_state **out);
CVF_API cvf_status cvf_state_load(const char *path, cvf_state **out);
CVF_API void cvf_state_free(cvf_state *state);

CVF_API int cvf_state_dim(const cvf_state *state);
CVF_API double cvf_state_trace(const cvf_state *state);

// Writes the JSON document including the terminating NUL. *len receives the
// string length without the NUL; pass buf = NULL to query it.
CVF_API cvf_status cvf_state_to_json(const cvf_state *state, char *buf, size_t cap, size_t *len);

// <target|rho|target> for a pure target state of equal dimension.
CVF_API cvf_status cvf_state_fidelity(const cvf_state *rho, const cvf_state *target, double *out);

// W on a points x points grid over [-window, window]^2; values[iq * points + ip].
CVF_API cvf_status cvf_state_wigner(const cvf_state *state, double window, int points,
                                    double *values);

// ---------------------------------------------------------------------------
// Loop environment

typedef struct cvf_env cvf_env;

typedef struct cvf_step_info {
  int n;           // detected photon number
  double prob;     // probability of that count
  double trace;    // accumulated trace
  double fidelity; // of the normalized state
  double reward;
  int done;
  double tau;
  double r;
  double alpha;
} cvf_step_info;

// run_config_json is a full training config; its episode section is used.
CVF_API cvf_status cvf_env_create(const char *run_config_json, uint64_t seed, cvf_env **out);
CVF_API void cvf_env_free(cvf_env *env);
CVF_API size_t cvf_env_observation_size(const cvf_env *env);
CVF_API cvf_status cvf_env_reset(cvf_env *env, uint64_t seed, double *obs, size_t obs_len);
// action holds three raw values in [-1, 1]; obs may be NULL.
CVF_API cvf_status cvf_env_step(cvf_env *env, const double *action, double *obs, size_t obs_len,
                                cvf_step_info *info);
// Copy of the current normalized loop state.
CVF_API cvf_status cvf_env_state(const cvf_env *env, cvf_state **out);
// Episode trace as CSV; same buffer protocol as cvf_state_to_json.
CVF_API cvf_status cvf_env_episode_csv(const cvf_env *env, char *buf, size_t cap, size_t *len);

// ---------------------------------------------------------------------------
// Trained policies

typedef struct cvf_policy cvf_policy;

CVF_API cvf_status cvf_policy_load(const char *checkpoint_path, cvf_policy **out);
CVF_API void cvf_policy_free(cvf_policy *policy);
CVF_API size_t cvf_policy_observation_size(const cvf_policy *policy);
// Deterministic (mean) action; writes three raw values.
CVF_API cvf_status cvf_policy_act(const cvf_policy *policy, const double *obs, size_t obs_len,
                                  double *action);

// ---------------------------------------------------------------------------
// Batch commands. Optional fields are NULL strings or has_* = 0.

typedef void (*cvf_progress_fn)(const char *message, void *user);

typedef struct cvf_train_options {
  const char *config;
  const char *out;
  const char *resume;
  int has_seed;
  uint64_t seed;
  int has_dim;
  int dim;
  int has_eta;
  double eta;
  cvf_progress_fn progress;
  void *user;
} cvf_train_options;

typedef struct cvf_evaluate_options {
  const char *checkpoint;
  const char *config;
  const char *out;
  int has_seed;
  uint64_t seed;
  int has_episodes;
  int episodes;
  int has_dim;
  int dim;
  int has_eta;
  double eta;
  cvf_progress_fn progress;
  void *user;
} cvf_evaluate_options;

typedef struct cvf_quartic_options {
  const char *config;
  const char *out;
  int has_dim;
  int dim;
  int has_eta;
  double eta;
  int has_phi2;
  double phi2;
  int render;
  cvf_progress_fn progress;
  void *user;
} cvf_quartic_options;

typedef struct cvf_wigner_options {
  const char *state;
  const char *out;
  double window;
  int points;
  int render;
} cvf_wigner_options;

// Zero every field; the Wigner variant also sets window 5 and 101 points.
CVF_API void cvf_train_options_init(cvf_train_options *opts);
CVF_API void cvf_evaluate_options_init(cvf_evaluate_options *opts);
CVF_API void cvf_quartic_options_init(cvf_quartic_options *opts);
CVF_API void cvf_wigner_options_init(cvf_wigner_options *opts);

CVF_API cvf_status cvf_train(const cvf_train_options *opts);
CVF_API cvf_status cvf_evaluate(const cvf_evaluate_options *opts, double *success_rate);
CVF_API cvf_status cvf_quartic(const cvf_quartic_options *opts, long *records, long *quartic_wins);
CVF_API cvf_status cvf_wigner(const cvf_wigner_options *opts, double *min_value);

#ifdef __cplusplus
}
#endif

#endif  // CVFORGE_CVFORGE_H_

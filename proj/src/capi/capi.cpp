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

#include "cvforge/cvforge.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "app/commands.hpp"
#include "app/config_io.hpp"
#include "app/manifest.hpp"
#include "common/files.hpp"
#include "common/json_util.hpp"
#include "env/environment.hpp"
#include "fock/operators.hpp"
#include "fock/state_io.hpp"
#include "fock/wigner.hpp"
#include "loop/loop_circuit.hpp"
#include "ppo/checkpoint.hpp"

using namespace cvforge;

struct cvf_state {
  fock::DensityOp rho;
};

struct cvf_env {
  env::CubicEnv env;
};

struct cvf_policy {
  ppo::Policy policy;
};

namespace {

thread_local std::string g_last_error;

cvf_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension: return CVF_ERR_INVALID_DIMENSION;
    case ErrorCode::invalid_parameter: return CVF_ERR_INVALID_PARAMETER;
    case ErrorCode::truncation_risk: return CVF_ERR_TRUNCATION_RISK;
    case ErrorCode::dimension_mismatch: return CVF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::zero_probability: return CVF_ERR_ZERO_PROBABILITY;
    case ErrorCode::lifecycle: return CVF_ERR_LIFECYCLE;
    case ErrorCode::config: return CVF_ERR_CONFIG;
    case ErrorCode::compatibility: return CVF_ERR_COMPATIBILITY;
    case ErrorCode::io: return CVF_ERR_IO;
    case ErrorCode::numeric: return CVF_ERR_NUMERIC;
  }
  return CVF_ERR_INTERNAL;
}

cvf_status set_error(cvf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
cvf_status guarded(F &&body) {
  try {
    body();
    return CVF_OK;
  } catch (const Error &e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(CVF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(CVF_ERR_INTERNAL, e.what());
  }
}

#define CVF_REQUIRE_ARG(ptr)                                                \
  do {                                                                      \
    if ((ptr) == nullptr) return set_error(CVF_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

cvf_status copy_string(const std::string &s, char *buf, std::size_t cap, std::size_t *len) {
  if (len) *len = s.size();
  if (buf == nullptr) return CVF_OK;
  if (cap < s.size() + 1)
    return set_error(CVF_ERR_BUFFER_TOO_SMALL,
                     "buffer holds " + std::to_string(cap) + " bytes, need " +
                         std::to_string(s.size() + 1));
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return CVF_OK;
}

cvf_status copy_vector(const Eigen::VectorXd &v, double *out, std::size_t len) {
  if (out == nullptr) return CVF_OK;
  if (len < static_cast<std::size_t>(v.size()))
    return set_error(CVF_ERR_BUFFER_TOO_SMALL, "observation buffer holds " + std::to_string(len) +
                                                   " values, need " + std::to_string(v.size()));
  std::memcpy(out, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
  return CVF_OK;
}

app::ProgressSink sink(cvf_progress_fn fn, void *user) {
  if (!fn) return {};
  return [fn, user](const std::string &msg) { fn(msg.c_str(), user); };
}


}  // namespace

extern "C" {

const char *cvf_version(void) {
  static const std::string version = app::code_version();
  return version.c_str();
}

const char *cvf_status_name(cvf_status status) {
  switch (status) {
    case CVF_OK: return "ok";
    case CVF_ERR_INVALID_DIMENSION: return "invalid_dimension";
    case CVF_ERR_INVALID_PARAMETER: return "invalid_parameter";
    case CVF_ERR_TRUNCATION_RISK: return "truncation_risk";
    case CVF_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case CVF_ERR_ZERO_PROBABILITY: return "zero_probability";
    case CVF_ERR_LIFECYCLE: return "lifecycle";
    case CVF_ERR_CONFIG: return "config";
    case CVF_ERR_COMPATIBILITY: return "compatibility";
    case CVF_ERR_IO: return "io";
    case CVF_ERR_NUMERIC: return "numeric";
    case CVF_ERR_NULL_ARGUMENT: return "null_argument";
    case CVF_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case CVF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char *cvf_last_error(void) { return g_last_error.c_str(); }

int cvf_exit_code(cvf_status status) {
  switch (status) {
    case CVF_OK: return 0;
    case CVF_ERR_CONFIG: return 2;
    case CVF_ERR_COMPATIBILITY:
    case CVF_ERR_DIMENSION_MISMATCH: return 3;
    case CVF_ERR_IO: return 4;
    default: return 1;
  }
}

// States -------------------------------------------------------------------

cvf_status cvf_state_squeezed_vacuum(double r, int dim, int pad, cvf_state **out) {
  CVF_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new cvf_state{
        fock::DensityOp::from_ket(fock::FockKet(fock::squeezed_vacuum(r, dim, pad)))};
  });
}

cvf_status cvf_state_cubic_target(double gamma, double r, double alpha_re, double alpha_im, int dim,
                                  int pad, cvf_state **out) {
  CVF_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new cvf_state{fock::DensityOp::from_ket(
        loop::target_cubic(gamma, r, fock::Complex(alpha_re, alpha_im), dim, pad))};
  });
}

cvf_status cvf_state_from_json(const char *text, cvf_state **out) {
  CVF_REQUIRE_ARG(text);
  CVF_REQUIRE_ARG(out);
  return guarded([&] { *out = new cvf_state{fock::as_density(fock::state_from_json(text))}; });
}

cvf_status cvf_state_load(const char *path, cvf_state **out) {
  CVF_REQUIRE_ARG(path);
  CVF_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new cvf_state{fock::as_density(fock::state_from_json(read_text_file(path)))};
  });
}

void cvf_state_free(cvf_state *state) { delete state; }

int cvf_state_dim(const cvf_state *state) { return state ? state->rho.dim() : 0; }

double cvf_state_trace(const cvf_state *state) { return state ? state->rho.trace() : 0.0; }

cvf_status cvf_state_to_json(const cvf_state *state, char *buf, size_t cap, size_t *len) {
  CVF_REQUIRE_ARG(state);
  std::string text;
  const cvf_status st = guarded([&] { text = fock::state_to_json(state->rho); });
  return st == CVF_OK ? copy_string(text, buf, cap, len) : st;
}

cvf_status cvf_state_fidelity(const cvf_state *rho, const cvf_state *target, double *out) {
  CVF_REQUIRE_ARG(rho);
  CVF_REQUIRE_ARG(target);
  CVF_REQUIRE_ARG(out);
  return guarded([&] {
    const fock::CMatrix &t = target->rho.matrix();
    Eigen::SelfAdjointEigenSolver<fock::CMatrix> solver(t);
    const Eigen::Index top = t.rows() - 1;
    const double purity = (t * t).trace().real() / (t.trace().real() * t.trace().real());
    require(std::abs(purity - 1.0) < 1e-8, ErrorCode::invalid_parameter,
            "fidelity target must be a pure state");
    fock::FockKet ket(solver.eigenvectors().col(top) * std::sqrt(solver.eigenvalues()(top)));
    *out = fock::fidelity_pure(rho->rho, ket);
  });
}

cvf_status cvf_state_wigner(const cvf_state *state, double window, int points, double *values) {
  CVF_REQUIRE_ARG(state);
  CVF_REQUIRE_ARG(values);
  return guarded([&] {
    require(points >= 2 && window > 0.0, ErrorCode::invalid_parameter,
            "grid needs a positive window and at least two points");
    const auto axis = fock::linspace(-window, window, points);
    const fock::WignerGrid grid = fock::wigner(state->rho, axis, axis);
    for (int iq = 0; iq < points; ++iq)
      for (int ip = 0; ip < points; ++ip) values[iq * points + ip] = grid.values(iq, ip);
  });
}

// Environment --------------------------------------------------------------

cvf_status cvf_env_create(const char *run_config_json, uint64_t seed, cvf_env **out) {
  CVF_REQUIRE_ARG(run_config_json);
  CVF_REQUIRE_ARG(out);
  return guarded([&] {
    const app::RunConfig cfg =
        app::run_config_from_json(parse_json_or_throw(run_config_json, "config"));
    *out = new cvf_env{env::CubicEnv(cfg.train.episode, seed)};
  });
}

void cvf_env_free(cvf_env *env) { delete env; }

size_t cvf_env_observation_size(const cvf_env *env) {
  return env ? static_cast<size_t>(env->env.observation_size()) : 0;
}

cvf_status cvf_env_reset(cvf_env *env, uint64_t seed, double *obs, size_t obs_len) {
  CVF_REQUIRE_ARG(env);
  env::Observation o;
  const cvf_status st = guarded([&] { o = env->env.reset(seed); });
  return st == CVF_OK ? copy_vector(o, obs, obs_len) : st;
}

cvf_status cvf_env_step(cvf_env *env, const double *action, double *obs, size_t obs_len,
                        cvf_step_info *info) {
  CVF_REQUIRE_ARG(env);
  CVF_REQUIRE_ARG(action);
  if (obs != nullptr && obs_len < static_cast<size_t>(env->env.observation_size()))
    return set_error(CVF_ERR_BUFFER_TOO_SMALL, "observation buffer too small");
  env::StepOutput o;
  const cvf_status st =
      guarded([&] { o = env->env.step(std::span<const double>(action, env::kActionDim)); });
  if (st != CVF_OK) return st;
  if (info) {
    info->n = o.info.n;
    info->prob = o.info.prob;
    info->trace = o.info.trace;
    info->fidelity = o.info.fidelity;
    info->reward = o.reward;
    info->done = o.done ? 1 : 0;
    info->tau = o.info.action.tau;
    info->r = o.info.action.r;
    info->alpha = o.info.action.alpha;
  }
  return copy_vector(o.obs, obs, obs_len);
}

cvf_status cvf_env_state(const cvf_env *env, cvf_state **out) {
  CVF_REQUIRE_ARG(env);
  CVF_REQUIRE_ARG(out);
  return guarded([&] {
    require(env->env.started(), ErrorCode::lifecycle, "environment has not been reset");
    *out = new cvf_state{env->env.state()};
  });
}

cvf_status cvf_env_episode_csv(const cvf_env *env, char *buf, size_t cap, size_t *len) {
  CVF_REQUIRE_ARG(env);
  std::string text;
  const cvf_status st = guarded([&] { text = env->env.episode_csv(); });
  return st == CVF_OK ? copy_string(text, buf, cap, len) : st;
}

// Policies -----------------------------------------------------------------

cvf_status cvf_policy_load(const char *checkpoint_path, cvf_policy **out) {
  CVF_REQUIRE_ARG(checkpoint_path);
  CVF_REQUIRE_ARG(out);
  return guarded([&] { *out = new cvf_policy{ppo::load_checkpoint(checkpoint_path).policy}; });
}

void cvf_policy_free(cvf_policy *policy) { delete policy; }

size_t cvf_policy_observation_size(const cvf_policy *policy) {
  return policy ? static_cast<size_t>(policy->policy.shape().obs_dim) : 0;
}

cvf_status cvf_policy_act(const cvf_policy *policy, const double *obs, size_t obs_len,
                          double *action) {
  CVF_REQUIRE_ARG(policy);
  CVF_REQUIRE_ARG(obs);
  CVF_REQUIRE_ARG(action);
  return guarded([&] {
    const auto n = static_cast<size_t>(policy->policy.shape().obs_dim);
    require(obs_len == n, ErrorCode::dimension_mismatch,
            "observation has " + std::to_string(obs_len) + " values, policy expects " +
                std::to_string(n));
    const Eigen::Map<const Eigen::MatrixXd> x(obs, static_cast<Eigen::Index>(n), 1);
    const Eigen::MatrixXd mean = policy->policy.mean(x);
    for (int k = 0; k < env::kActionDim; ++k) action[k] = mean(k, 0);
  });
}

// Commands -----------------------------------------------------------------

void cvf_train_options_init(cvf_train_options *opts) {
  if (opts) *opts = cvf_train_options{};
}

void cvf_evaluate_options_init(cvf_evaluate_options *opts) {
  if (opts) *opts = cvf_evaluate_options{};
}

void cvf_quartic_options_init(cvf_quartic_options *opts) {
  if (opts) *opts = cvf_quartic_options{};
}

void cvf_wigner_options_init(cvf_wigner_options *opts) {
  if (!opts) return;
  *opts = cvf_wigner_options{};
  opts->window = 5.0;
  opts->points = 101;
}

cvf_status cvf_train(const cvf_train_options *opts) {
  CVF_REQUIRE_ARG(opts);
  CVF_REQUIRE_ARG(opts->config);
  CVF_REQUIRE_ARG(opts->out);
  return guarded([&] {
    app::TrainArgs a;
    a.config = opts->config;
    a.out = opts->out;
    if (opts->resume) a.resume = opts->resume;
    if (opts->has_seed) a.seed = opts->seed;
    if (opts->has_dim) a.dim = opts->dim;
    if (opts->has_eta) a.eta = opts->eta;
    a.progress = sink(opts->progress, opts->user);
    app::cmd_train(a);
  });
}

cvf_status cvf_evaluate(const cvf_evaluate_options *opts, double *success_rate) {
  CVF_REQUIRE_ARG(opts);
  CVF_REQUIRE_ARG(opts->checkpoint);
  CVF_REQUIRE_ARG(opts->config);
  CVF_REQUIRE_ARG(opts->out);
  return guarded([&] {
    app::EvaluateArgs a;
    a.checkpoint = opts->checkpoint;
    a.config = opts->config;
    a.out = opts->out;
    if (opts->has_seed) a.seed = opts->seed;
    if (opts->has_episodes) a.episodes = opts->episodes;
    if (opts->has_dim) a.dim = opts->dim;
    if (opts->has_eta) a.eta = opts->eta;
    a.progress = sink(opts->progress, opts->user);
    const app::EvaluateSummary s = app::cmd_evaluate(a);
    if (success_rate) *success_rate = s.success_rate;
  });
}

cvf_status cvf_quartic(const cvf_quartic_options *opts, long *records, long *quartic_wins) {
  CVF_REQUIRE_ARG(opts);
  CVF_REQUIRE_ARG(opts->config);
  CVF_REQUIRE_ARG(opts->out);
  return guarded([&] {
    app::QuarticArgs a;
    a.config = opts->config;
    a.out = opts->out;
    if (opts->has_dim) a.dim = opts->dim;
    if (opts->has_eta) a.eta = opts->eta;
    if (opts->has_phi2) a.phi2 = opts->phi2;
    a.render = opts->render != 0;
    a.progress = sink(opts->progress, opts->user);
    const app::QuarticSummary s = app::cmd_quartic(a);
    if (records) *records = s.records;
    if (quartic_wins) *quartic_wins = s.quartic_wins;
  });
}

cvf_status cvf_wigner(const cvf_wigner_options *opts, double *min_value) {
  CVF_REQUIRE_ARG(opts);
  CVF_REQUIRE_ARG(opts->state);
  CVF_REQUIRE_ARG(opts->out);
  return guarded([&] {
    app::WignerArgs a;
    a.state = opts->state;
    a.out = opts->out;
    a.window = opts->window;
    a.points = opts->points;
    a.render = opts->render != 0;
    const app::WignerSummary s = app::cmd_wigner(a);
    if (min_value) *min_value = s.min_value;
  });
}

}  // extern "C"

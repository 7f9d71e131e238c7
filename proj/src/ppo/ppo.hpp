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

#ifndef CVFORGE_PPO_PPO_HPP_
#define CVFORGE_PPO_PPO_HPP_

#include <cstdint>
#include <vector>

#include "ppo/policy.hpp"

namespace cvforge::ppo {

struct PpoConfig {
  double gamma = 0.999;
  long n_steps = 35000;
  // When false, n_steps counts transitions across the whole pool per rollout;
  // when true, each environment contributes n_steps.
  bool n_steps_per_env = false;
  long batch_size = 5000;
  int n_epochs = 15;
  double clip_range = 0.2;
  double learning_rate = 1e-3;
  double max_grad_norm = 0.5;
  double vf_coef = 0.5;
  double ent_coef = 0.0;
  double gae_lambda = 0.95;
  bool normalize_advantage = true;
  int n_envs = 40;
  long total_timesteps = 5'700'000;

  long steps_per_env() const;
  long rollout_size() const { return steps_per_env() * n_envs; }
  void validate() const;
};

struct AdamState {
  RVector m;
  RVector v;
  long t = 0;

  explicit AdamState(Eigen::Index n = 0) : m(RVector::Zero(n)), v(RVector::Zero(n)) {}
};

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEps = 1e-8;

void adam_step(RVector &params, AdamState &state, const RVector &grad, double lr);

// Rewards, values and dones are (time x env). done(t, e) marks that the
// transition taken at t ended the episode. last_values bootstraps the state
// after the final stored step.
struct GaeResult {
  RMatrix advantages;
  RMatrix returns;
};

GaeResult compute_gae(const RMatrix &rewards, const RMatrix &values, const RMatrix &dones,
                      const RVector &last_values, double gamma, double lam);

class RolloutBuffer {
 public:
  RolloutBuffer(long steps_per_env, int n_envs, int obs_dim, int act_dim = 3);

  long capacity() const { return steps_ * envs_; }
  long steps_per_env() const { return steps_; }
  int n_envs() const { return envs_; }
  long position() const { return pos_; }
  bool full() const { return pos_ == steps_; }
  void reset() { pos_ = 0; }

  // One time step for every environment; obs are the inputs the actions were taken from.
  void add(const RMatrix &obs, const RMatrix &actions, const RVector &log_probs,
           const RVector &values, const RVector &rewards, const std::vector<bool> &dones);

  void compute_returns_and_advantage(const RVector &last_values, double gamma, double lam);

  // Flattened sample index is t * n_envs + e.
  const RMatrix &observations() const { return obs_; }
  const RMatrix &actions() const { return actions_; }
  const RVector &log_probs() const { return log_probs_; }
  const RVector &values() const { return values_; }
  const RMatrix &rewards() const { return rewards_; }
  const RMatrix &dones() const { return dones_; }
  const RVector &advantages() const { return advantages_; }
  const RVector &returns() const { return returns_; }

  // Test hook: overwrite computed advantages and returns.
  void set_targets(RVector advantages, RVector returns);

 private:
  long steps_;
  int envs_;
  long pos_ = 0;
  RMatrix obs_;
  RMatrix actions_;
  RVector log_probs_;
  RVector values_;
  RMatrix rewards_;
  RMatrix dones_;
  RVector advantages_;
  RVector returns_;
};

struct Minibatch {
  RMatrix obs;
  RMatrix actions;
  RVector old_log_prob;
  RVector advantages;  // used as given
  RVector returns;
};

struct LossTerms {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy_loss = 0.0;
  double total = 0.0;
  double mean_ratio = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

// Clipped surrogate + vf_coef * MSE - ent_coef * entropy. When grad is non-null it
// receives the gradient with respect to policy.params().
LossTerms ppo_loss(const Policy &policy, const Minibatch &mb, const PpoConfig &cfg,
                   RVector *grad);

struct UpdateStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy_loss = 0.0;
  double mean_ratio = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
  double grad_norm = 0.0;
  long minibatches = 0;
};

// Scale grad in place so its Euclidean norm is at most max_norm; returns the original norm.
double clip_grad_norm(RVector &grad, double max_norm);

UpdateStats ppo_update(Policy &policy, AdamState &adam, const RolloutBuffer &buffer,
                       const PpoConfig &cfg, CounterStream &rng);

}  // namespace cvforge::ppo

#endif  // CVFORGE_PPO_PPO_HPP_

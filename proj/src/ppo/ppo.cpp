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

#include "ppo/ppo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "common/error.hpp"

namespace cvforge::ppo {

long PpoConfig::steps_per_env() const {
  return n_steps_per_env ? n_steps : n_steps / n_envs;
}

void PpoConfig::validate() const {
  require(n_envs >= 1, ErrorCode::config, "n_envs must be positive");
  require(n_steps >= 1, ErrorCode::config, "n_steps must be positive");
  require(n_steps_per_env || n_steps % n_envs == 0, ErrorCode::config,
          "pooled n_steps must be a multiple of n_envs");
  require(batch_size >= 1 && rollout_size() % batch_size == 0, ErrorCode::config,
          "batch_size must divide the rollout size");
  require(n_epochs >= 0, ErrorCode::config, "n_epochs must be non-negative");
  require(gamma > 0.0 && gamma <= 1.0, ErrorCode::config, "gamma must lie in (0, 1]");
  require(gae_lambda >= 0.0 && gae_lambda <= 1.0, ErrorCode::config,
          "gae_lambda must lie in [0, 1]");
  require(clip_range > 0.0, ErrorCode::config, "clip_range must be positive");
  require(learning_rate > 0.0, ErrorCode::config, "learning_rate must be positive");
  require(max_grad_norm > 0.0, ErrorCode::config, "max_grad_norm must be positive");
  require(vf_coef >= 0.0 && ent_coef >= 0.0, ErrorCode::config,
          "loss coefficients must be non-negative");
  require(total_timesteps >= 1, ErrorCode::config, "total_timesteps must be positive");
}

void adam_step(RVector &params, AdamState &state, const RVector &grad, double lr) {
  require(params.size() == grad.size() && state.m.size() == grad.size(),
          ErrorCode::dimension_mismatch, "Adam shapes do not match");
  ++state.t;
  state.m = kAdamBeta1 * state.m + (1.0 - kAdamBeta1) * grad;
  state.v = kAdamBeta2 * state.v + (1.0 - kAdamBeta2) * grad.cwiseAbs2();
  const double c1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(state.t));
  const double c2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(state.t));
  const double step = lr / c1;
  params.array() -= step * state.m.array() / ((state.v.array() / c2).sqrt() + kAdamEps);
}

GaeResult compute_gae(const RMatrix &rewards, const RMatrix &values, const RMatrix &dones,
                      const RVector &last_values, double gamma, double lam) {
  const Eigen::Index T = rewards.rows(), E = rewards.cols();
  require(values.rows() == T && values.cols() == E && dones.rows() == T && dones.cols() == E &&
              last_values.size() == E,
          ErrorCode::dimension_mismatch, "GAE inputs have inconsistent shapes");
  GaeResult out{RMatrix::Zero(T, E), RMatrix::Zero(T, E)};
  for (Eigen::Index e = 0; e < E; ++e) {
    double gae = 0.0;
    for (Eigen::Index t = T - 1; t >= 0; --t) {
      const double next_value = t + 1 < T ? values(t + 1, e) : last_values(e);
      const double live = 1.0 - dones(t, e);
      const double delta = rewards(t, e) + gamma * next_value * live - values(t, e);
      gae = delta + gamma * lam * live * gae;
      out.advantages(t, e) = gae;
    }
  }
  out.returns = out.advantages + values;
  return out;
}

RolloutBuffer::RolloutBuffer(long steps_per_env, int n_envs, int obs_dim, int act_dim)
    : steps_(steps_per_env), envs_(n_envs) {
  require(steps_per_env >= 1 && n_envs >= 1 && obs_dim >= 1 && act_dim >= 1,
          ErrorCode::invalid_parameter, "buffer sizes must be positive");
  const Eigen::Index n = capacity();
  obs_.resize(obs_dim, n);
  actions_.resize(act_dim, n);
  log_probs_.resize(n);
  values_.resize(n);
  rewards_.resize(steps_, envs_);
  dones_.resize(steps_, envs_);
}

void RolloutBuffer::add(const RMatrix &obs, const RMatrix &actions, const RVector &log_probs,
                        const RVector &values, const RVector &rewards,
                        const std::vector<bool> &dones) {
  require(!full(), ErrorCode::lifecycle, "rollout buffer is full");
  require(obs.cols() == envs_ && obs.rows() == obs_.rows() && actions.cols() == envs_ &&
              actions.rows() == actions_.rows() && log_probs.size() == envs_ &&
              values.size() == envs_ && rewards.size() == envs_ &&
              static_cast<int>(dones.size()) == envs_,
          ErrorCode::dimension_mismatch, "rollout step has inconsistent shapes");
  const Eigen::Index base = pos_ * envs_;
  obs_.middleCols(base, envs_) = obs;
  actions_.middleCols(base, envs_) = actions;
  log_probs_.segment(base, envs_) = log_probs;
  values_.segment(base, envs_) = values;
  rewards_.row(pos_) = rewards.transpose();
  for (int e = 0; e < envs_; ++e) dones_(pos_, e) = dones[e] ? 1.0 : 0.0;
  ++pos_;
}

void RolloutBuffer::compute_returns_and_advantage(const RVector &last_values, double gamma,
                                                  double lam) {
  require(full(), ErrorCode::lifecycle, "advantages need a full buffer");
  RMatrix v(steps_, envs_);
  for (long t = 0; t < steps_; ++t) v.row(t) = values_.segment(t * envs_, envs_).transpose();
  const GaeResult g = compute_gae(rewards_, v, dones_, last_values, gamma, lam);
  advantages_.resize(capacity());
  returns_.resize(capacity());
  for (long t = 0; t < steps_; ++t) {
    advantages_.segment(t * envs_, envs_) = g.advantages.row(t).transpose();
    returns_.segment(t * envs_, envs_) = g.returns.row(t).transpose();
  }
  require(advantages_.allFinite(), ErrorCode::numeric, "advantages are not finite");
}

void RolloutBuffer::set_targets(RVector advantages, RVector returns) {
  require(advantages.size() == capacity() && returns.size() == capacity(),
          ErrorCode::dimension_mismatch, "targets have wrong length");
  advantages_ = std::move(advantages);
  returns_ = std::move(returns);
}

LossTerms ppo_loss(const Policy &policy, const Minibatch &mb, const PpoConfig &cfg,
                   RVector *grad) {
  const Eigen::Index B = mb.obs.cols();
  require(B >= 1 && mb.actions.cols() == B && mb.old_log_prob.size() == B &&
              mb.advantages.size() == B && mb.returns.size() == B,
          ErrorCode::dimension_mismatch, "minibatch has inconsistent shapes");
  const Mlp &actor = policy.actor();
  const Mlp &critic = policy.critic();
  const double *theta = policy.params().data();
  const double *actor_theta = theta + policy.actor_offset();
  const double *critic_theta = theta + policy.critic_offset();

  Mlp::Cache actor_cache, critic_cache;
  const RMatrix mu = actor.forward(actor_theta, mb.obs, grad ? &actor_cache : nullptr);
  const RVector value =
      critic.forward(critic_theta, mb.obs, grad ? &critic_cache : nullptr).row(0).transpose();
  const RVector log_prob = policy.log_prob(mu, mb.actions);
  const RVector log_ratio = log_prob - mb.old_log_prob;
  const RVector ratio = log_ratio.array().exp();

  const double lo = 1.0 - cfg.clip_range, hi = 1.0 + cfg.clip_range;
  LossTerms out;
  // d(policy loss)/d(log_prob) per sample.
  RVector dlogp(B);
  double surrogate = 0.0;
  long clipped = 0;
  for (Eigen::Index b = 0; b < B; ++b) {
    const double a = mb.advantages(b), r = ratio(b);
    const double rc = std::clamp(r, lo, hi);
    const double unclipped = r * a, bounded = rc * a;
    if (unclipped <= bounded) {
      surrogate += unclipped;
      dlogp(b) = -a * r / double(B);
    } else {
      surrogate += bounded;
      // The clipped branch only carries gradient while the ratio is inside the band.
      dlogp(b) = (r > lo && r < hi) ? -a * r / double(B) : 0.0;
    }
    if (std::abs(r - 1.0) > cfg.clip_range) ++clipped;
  }
  out.policy_loss = -surrogate / double(B);
  out.value_loss = (mb.returns - value).squaredNorm() / double(B);
  out.entropy_loss = -policy.entropy();
  out.total = out.policy_loss + cfg.vf_coef * out.value_loss + cfg.ent_coef * out.entropy_loss;
  out.mean_ratio = ratio.mean();
  out.clip_fraction = double(clipped) / double(B);
  out.approx_kl = ((ratio.array() - 1.0) - log_ratio.array()).mean();
  require(std::isfinite(out.total), ErrorCode::numeric,
          "loss is not finite (policy " + std::to_string(out.policy_loss) + ", value " +
              std::to_string(out.value_loss) + ")");
  if (!grad) return out;

  grad->setZero(policy.params().size());
  const RVector ls = policy.log_std();
  const RVector inv_var = (-2.0 * ls).array().exp();
  const RMatrix diff = mb.actions - mu;
  // log_prob = -1/2 sum (a - mu)^2 / sigma^2 - sum log sigma - const
  RMatrix dmu = diff.array().colwise() * inv_var.array();
  dmu.array().rowwise() *= dlogp.transpose().array();
  actor.backward(actor_theta, actor_cache, dmu, grad->data() + policy.actor_offset());

  RVector dls = RVector::Zero(ls.size());
  for (Eigen::Index b = 0; b < B; ++b)
    dls += dlogp(b) * ((diff.col(b).array().square() * inv_var.array()) - 1.0).matrix();
  dls.array() -= cfg.ent_coef;
  grad->segment(policy.log_std_offset(), ls.size()) = dls;

  const RMatrix dv = (cfg.vf_coef * 2.0 / double(B)) * (value - mb.returns).transpose();
  critic.backward(critic_theta, critic_cache, dv, grad->data() + policy.critic_offset());
  return out;
}

double clip_grad_norm(RVector &grad, double max_norm) {
  const double norm = grad.norm();
  const double coef = max_norm / (norm + 1e-6);
  if (coef < 1.0) grad *= coef;
  return norm;
}

UpdateStats ppo_update(Policy &policy, AdamState &adam, const RolloutBuffer &buffer,
                       const PpoConfig &cfg, CounterStream &rng) {
  require(buffer.full(), ErrorCode::lifecycle, "update needs a full rollout buffer");
  require(buffer.advantages().size() == buffer.capacity(), ErrorCode::lifecycle,
          "advantages have not been computed");
  if (adam.m.size() != policy.params().size()) adam = AdamState(policy.params().size());
  const long n = buffer.capacity();
  const long bs = std::min(cfg.batch_size, n);
  std::vector<long> order(n);
  RVector grad(policy.params().size());
  UpdateStats stats;

  for (int epoch = 0; epoch < cfg.n_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0L);
    for (long i = n - 1; i > 0; --i) {
      const long j = static_cast<long>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
      std::swap(order[i], order[j]);
    }
    for (long start = 0; start < n; start += bs) {
      const long len = std::min(bs, n - start);
      Minibatch mb;
      mb.obs.resize(buffer.observations().rows(), len);
      mb.actions.resize(buffer.actions().rows(), len);
      mb.old_log_prob.resize(len);
      mb.advantages.resize(len);
      mb.returns.resize(len);
      for (long k = 0; k < len; ++k) {
        const long idx = order[start + k];
        mb.obs.col(k) = buffer.observations().col(idx);
        mb.actions.col(k) = buffer.actions().col(idx);
        mb.old_log_prob(k) = buffer.log_probs()(idx);
        mb.advantages(k) = buffer.advantages()(idx);
        mb.returns(k) = buffer.returns()(idx);
      }
      if (cfg.normalize_advantage && len > 1) {
        const double mean = mb.advantages.mean();
        const double sd =
            std::sqrt((mb.advantages.array() - mean).square().sum() / double(len - 1));
        mb.advantages = ((mb.advantages.array() - mean) / (sd + 1e-8)).matrix();
      }
      const LossTerms terms = ppo_loss(policy, mb, cfg, &grad);
      stats.grad_norm += clip_grad_norm(grad, cfg.max_grad_norm);
      adam_step(policy.params(), adam, grad, cfg.learning_rate);
      require(policy.params().allFinite(), ErrorCode::numeric, "parameters became non-finite");

      stats.policy_loss += terms.policy_loss;
      stats.value_loss += terms.value_loss;
      stats.entropy_loss += terms.entropy_loss;
      stats.mean_ratio += terms.mean_ratio;
      stats.clip_fraction += terms.clip_fraction;
      stats.approx_kl += terms.approx_kl;
      ++stats.minibatches;
    }
  }
  if (stats.minibatches > 0) {
    const double k = double(stats.minibatches);
    stats.policy_loss /= k;
    stats.value_loss /= k;
    stats.entropy_loss /= k;
    stats.mean_ratio /= k;
    stats.clip_fraction /= k;
    stats.approx_kl /= k;
    stats.grad_norm /= k;
  }
  return stats;
}

}  // namespace cvforge::ppo

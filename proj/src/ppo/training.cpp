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

#include "ppo/training.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "common/format.hpp"
#include "common/parallel.hpp"

namespace cvforge::ppo {

PolicyShape TrainConfig::shape() const {
  return PolicyShape{episode.loop.dim * episode.loop.dim, hidden, env::kActionDim};
}

void TrainConfig::validate() const {
  ppo.validate();
  episode.validate();
  for (int h : hidden) require(h >= 1, ErrorCode::config, "hidden layer sizes must be positive");
  require(checkpoint_every >= 0, ErrorCode::config, "checkpoint_every must be non-negative");
}

TrainState make_train_state(const TrainConfig &cfg, std::string config_hash) {
  cfg.validate();
  TrainState st;
  st.policy = Policy(cfg.shape());
  st.policy.initialize(cfg.seed);
  st.adam = AdamState(st.policy.params().size());
  st.seed = cfg.seed;
  st.config_hash = std::move(config_hash);
  return st;
}

Policy make_null_policy(const PolicyShape &shape) {
  Policy p(shape);
  p.params().setZero();
  // Output bias of the actor: raw tau = -1 maps to tau = 0.
  const Mlp &actor = p.actor();
  actor.bias(p.params().data() + p.actor_offset(), actor.layers() - 1)(0) = -1.0;
  return p;
}

namespace {

RMatrix stack(const std::vector<env::Observation> &obs) {
  RMatrix m(obs.front().size(), static_cast<Eigen::Index>(obs.size()));
  for (std::size_t i = 0; i < obs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = obs[i];
  return m;
}

}  // namespace

void train(TrainState &state, const TrainConfig &cfg, const TrainCallbacks &callbacks) {
  cfg.validate();
  require(state.policy.shape().obs_dim == cfg.shape().obs_dim &&
              state.policy.shape().hidden == cfg.hidden,
          ErrorCode::compatibility, "policy shape does not match the configuration");
  const PpoConfig &pc = cfg.ppo;
  const long per_env = pc.steps_per_env();

  env::EnvPool pool(cfg.episode, pc.n_envs, mix64(state.seed) ^ mix64(0xE0 + state.updates));
  CounterStream act_rng = CounterStream::derive(state.seed, 1);
  act_rng.set_counter(state.act_counter);
  CounterStream shuffle_rng = CounterStream::derive(state.seed, 2);
  shuffle_rng.set_counter(state.shuffle_counter);

  RolloutBuffer buffer(per_env, pc.n_envs, cfg.shape().obs_dim, env::kActionDim);
  RMatrix obs = stack(pool.reset_all());
  std::vector<double> running_reward(pc.n_envs, 0.0);

  while (state.num_timesteps < pc.total_timesteps) {
    buffer.reset();
    std::vector<EpisodeLogRow> finished;
    double reward_sum = 0.0;
    while (!buffer.full()) {
      const Policy::Act a = state.policy.act(obs, &act_rng);
      std::vector<env::RawAction> actions(pc.n_envs);
      for (int e = 0; e < pc.n_envs; ++e)
        for (int k = 0; k < env::kActionDim; ++k) actions[e][k] = a.actions(k, e);
      const std::vector<env::StepOutput> out = pool.step(actions);

      RVector rewards(pc.n_envs);
      std::vector<bool> dones(pc.n_envs);
      for (int e = 0; e < pc.n_envs; ++e) {
        rewards(e) = out[e].reward;
        dones[e] = out[e].done;
        reward_sum += out[e].reward;
        running_reward[e] += out[e].reward;
        if (out[e].done) {
          EpisodeLogRow row;
          row.episode = ++state.episodes;
          row.update = state.updates + 1;
          row.env = e;
          row.terminal_fidelity = out[e].info.fidelity;
          row.total_reward = running_reward[e];
          row.final_trace = out[e].info.trace;
          finished.push_back(row);
          running_reward[e] = 0.0;
        }
      }
      buffer.add(obs, a.actions, a.log_prob, a.value, rewards, dones);
      for (int e = 0; e < pc.n_envs; ++e) obs.col(e) = out[e].obs;
      state.num_timesteps += pc.n_envs;
    }

    buffer.compute_returns_and_advantage(state.policy.value(obs), pc.gamma, pc.gae_lambda);
    const UpdateStats stats = ppo_update(state.policy, state.adam, buffer, pc, shuffle_rng);
    ++state.updates;
    state.act_counter = act_rng.counter();
    state.shuffle_counter = shuffle_rng.counter();

    UpdateLogRow row;
    row.update = state.updates;
    row.steps = state.num_timesteps;
    row.mean_reward = reward_sum / double(buffer.capacity());
    if (finished.empty()) {
      row.mean_terminal_fidelity = std::numeric_limits<double>::quiet_NaN();
    } else {
      double s = 0.0;
      for (const auto &f : finished) s += f.terminal_fidelity;
      row.mean_terminal_fidelity = s / double(finished.size());
    }
    row.clip_fraction = stats.clip_fraction;
    row.value_loss = stats.value_loss;
    row.stats = stats;
    if (callbacks.on_update) callbacks.on_update(row, finished);
    const bool last = state.num_timesteps >= pc.total_timesteps;
    if (callbacks.on_checkpoint && cfg.checkpoint_every > 0 &&
        (state.updates % cfg.checkpoint_every == 0 || last))
      callbacks.on_checkpoint(state);
  }
}

std::string training_log_header() {
  return "update,steps,mean_reward,mean_terminal_fidelity,clip_fraction,value_loss";
}

std::vector<std::string> training_log_fields(const UpdateLogRow &row) {
  return {std::to_string(row.update), std::to_string(row.steps), format_double(row.mean_reward),
          format_double(row.mean_terminal_fidelity), format_double(row.clip_fraction),
          format_double(row.value_loss)};
}

std::string episode_log_header() {
  return "episode,update,env,terminal_fidelity,total_reward,final_trace";
}

std::vector<std::string> episode_log_fields(const EpisodeLogRow &row) {
  return {std::to_string(row.episode), std::to_string(row.update), std::to_string(row.env),
          format_double(row.terminal_fidelity), format_double(row.total_reward),
          format_double(row.final_trace)};
}

EpisodeEval summarize_episode(const std::vector<env::StepOutput> &history, double tau_tol) {
  EpisodeEval ev;
  const int m = static_cast<int>(history.size());
  if (m == 0) return ev;
  // Start of the closing run of freeze steps; m when the last step is not a freeze.
  int settle = m;
  while (settle > 0 && history[settle - 1].info.action.tau <= tau_tol) --settle;
  int last_reset = -1;
  for (int j = 0; j < settle; ++j) {
    ev.photons_before_tau0 += history[j].info.n;
    if (history[j].info.action.tau >= 1.0 - tau_tol) last_reset = j;
  }
  ev.steps_before_tau0 = settle;
  ev.steps_between_resets = settle - (last_reset + 1);
  ev.terminal_fidelity = history.back().info.fidelity;
  ev.final_trace = history.back().info.trace;
  return ev;
}

EvalReport evaluate(const Policy &policy, const env::EpisodeConfig &episode,
                    const EvalConfig &cfg) {
  require(cfg.n_sets >= 1 && cfg.episodes_per_set >= 1, ErrorCode::config,
          "evaluation needs at least one set and one episode");
  episode.validate();
  require(policy.shape().obs_dim == episode.loop.dim * episode.loop.dim, ErrorCode::compatibility,
          "policy observation size does not match the loop dimension");
  auto target = std::make_shared<const env::FockKet>(loop::target_cubic(
      episode.target.gamma, episode.target.r, episode.target.alpha, episode.loop.dim,
      episode.loop.pad));

  EvalReport rep;
  rep.episodes.resize(static_cast<std::size_t>(cfg.n_sets) * cfg.episodes_per_set);
  parallel_for(rep.episodes.size(), [&](std::size_t idx) {
    const int set = static_cast<int>(idx / cfg.episodes_per_set);
    const int ep = static_cast<int>(idx % cfg.episodes_per_set);
    const std::uint64_t seed = mix64(cfg.seed + static_cast<std::uint64_t>(set)) ^
                               mix64(static_cast<std::uint64_t>(ep) + 0x51ULL);
    env::CubicEnv env(episode, seed, target);
    env::Observation obs = env.reset();
    while (!env.done()) {
      const RMatrix mean = policy.mean(obs);
      obs = env.step(std::span<const double>(mean.data(), env::kActionDim)).obs;
    }
    EpisodeEval ev = summarize_episode(env.history(), cfg.tau_tol);
    ev.set = set;
    ev.episode = ep;
    ev.seed = seed;
    ev.success =
        loop::success_check(env.state().scaled(env.accumulated_trace()), *target, cfg.thresholds)
            .success;
    rep.episodes[idx] = ev;
  });

  rep.set_success_rates.assign(cfg.n_sets, 0.0);
  long wins = 0;
  for (const EpisodeEval &ev : rep.episodes) {
    if (!ev.success) continue;
    ++wins;
    rep.set_success_rates[ev.set] += 1.0 / cfg.episodes_per_set;
  }
  rep.success_rate = double(wins) / double(rep.episodes.size());
  return rep;
}

}  // namespace cvforge::ppo

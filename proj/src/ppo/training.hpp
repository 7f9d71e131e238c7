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

#ifndef CVFORGE_PPO_TRAINING_HPP_
#define CVFORGE_PPO_TRAINING_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "env/environment.hpp"
#include "ppo/ppo.hpp"

namespace cvforge::ppo {

struct TrainConfig {
  PpoConfig ppo;
  env::EpisodeConfig episode;
  std::vector<int> hidden{256, 128, 64};
  std::uint64_t seed = 1;
  int checkpoint_every = 1;  // updates between checkpoints; 0 disables

  PolicyShape shape() const;
  void validate() const;
};

struct TrainState {
  Policy policy;
  AdamState adam;
  long num_timesteps = 0;
  long updates = 0;
  long episodes = 0;
  std::uint64_t act_counter = 0;
  std::uint64_t shuffle_counter = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
};

TrainState make_train_state(const TrainConfig &cfg, std::string config_hash = {});

// Constant-mean policy that always requests tau = 0, r = 0, alpha = 0.
Policy make_null_policy(const PolicyShape &shape);

struct UpdateLogRow {
  long update = 0;
  long steps = 0;
  double mean_reward = 0.0;             // per transition in the rollout
  double mean_terminal_fidelity = 0.0;  // episodes finished in the rollout; NaN if none
  double clip_fraction = 0.0;
  double value_loss = 0.0;
  UpdateStats stats;
};

struct EpisodeLogRow {
  long episode = 0;
  long update = 0;  // rollout the episode finished in (1-based)
  int env = 0;
  double terminal_fidelity = 0.0;
  double total_reward = 0.0;
  double final_trace = 0.0;
};

struct TrainCallbacks {
  std::function<void(const UpdateLogRow &, const std::vector<EpisodeLogRow> &)> on_update;
  std::function<void(const TrainState &)> on_checkpoint;
};

// Alternates rollout collection and PPO updates until num_timesteps reaches
// the configured total. Picks up from state.num_timesteps on resume; the
// environment pool restarts fresh episodes at each call.
void train(TrainState &state, const TrainConfig &cfg, const TrainCallbacks &callbacks = {});

std::string training_log_header();
std::vector<std::string> training_log_fields(const UpdateLogRow &row);
std::string episode_log_header();
std::vector<std::string> episode_log_fields(const EpisodeLogRow &row);

struct EvalConfig {
  int n_sets = 5;
  int episodes_per_set = 200;
  std::uint64_t seed = 1000;
  loop::SuccessThresholds thresholds;
  double tau_tol = 1e-3;  // tau within this of 0 (or 1) counts as freeze (or reset)
};

struct EpisodeEval {
  int set = 0;
  int episode = 0;
  std::uint64_t seed = 0;
  double terminal_fidelity = 0.0;
  double final_trace = 0.0;
  long photons_before_tau0 = 0;
  int steps_before_tau0 = 0;
  int steps_between_resets = 0;
  bool success = false;
};

struct EvalReport {
  std::vector<EpisodeEval> episodes;
  std::vector<double> set_success_rates;
  double success_rate = 0.0;
};

// Per-episode statistics from a finished history.
EpisodeEval summarize_episode(const std::vector<env::StepOutput> &history, double tau_tol);

EvalReport evaluate(const Policy &policy, const env::EpisodeConfig &episode,
                    const EvalConfig &cfg);

}  // namespace cvforge::ppo

#endif  // CVFORGE_PPO_TRAINING_HPP_

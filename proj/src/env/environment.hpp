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

#ifndef CVFORGE_ENV_ENVIRONMENT_HPP_
#define CVFORGE_ENV_ENVIRONMENT_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "common/rng.hpp"
#include "loop/loop_circuit.hpp"

namespace cvforge::env {

using fock::RVector;
using loop::Complex;
using loop::DensityOp;
using loop::FockKet;

using Observation = RVector;

// Layout: Re of the strict upper triangle (row-major), then Im of the same
// entries, then the diagonal. Length dim^2.
Observation encode(const DensityOp &rho);

enum class FidelityMode {
  unnormalized,  // fidelity of the normalized state times the accumulated trace
  normalized,
};

struct RewardParams {
  double lambda = 55.0;
  FidelityMode mode = FidelityMode::unnormalized;
};

// trace^(lambda/10) * F^lambda for the normalized state and its logged trace.
double reward(double trace, const DensityOp &rho_normalized, const FockKet &target,
              const RewardParams &params);

struct TargetSpec {
  double gamma = -0.2;
  double r = -0.7;
  Complex alpha{0.0, 1.25};
};

struct EpisodeConfig {
  int m = 50;
  loop::LoopConfig loop;
  TargetSpec target;
  RewardParams reward;
  bool terminal_reward_only = false;

  void validate() const;
};

// Clip each component to [-1, 1], then tau -> [0, 1], r and alpha scaled by their bounds.
loop::Action map_action(std::span<const double> raw, const loop::LoopConfig &cfg);

inline constexpr int kActionDim = 3;
using RawAction = std::array<double, kActionDim>;

struct StepInfo {
  int n = -1;
  double prob = 0.0;
  double trace = 1.0;     // accumulated over the episode
  double fidelity = 0.0;  // of the normalized state
  loop::Action action;
};

struct StepOutput {
  Observation obs;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

class CubicEnv {
 public:
  CubicEnv(EpisodeConfig cfg, std::uint64_t seed,
           std::shared_ptr<const FockKet> target = nullptr);

  // Reseed and start a new episode.
  Observation reset(std::uint64_t seed);
  // Start a new episode continuing the current random stream.
  Observation reset();

  StepOutput step(std::span<const double> raw);

  const EpisodeConfig &config() const { return cfg_; }
  const FockKet &target() const { return *target_; }
  int observation_size() const { return cfg_.loop.dim * cfg_.loop.dim; }
  int step_index() const { return step_; }
  bool done() const { return step_ >= cfg_.m; }
  bool started() const { return started_; }
  const DensityOp &state() const { return state_; }
  double accumulated_trace() const { return trace_; }
  const StepInfo &initial_info() const { return initial_info_; }
  const std::vector<StepOutput> &history() const { return history_; }

  // step, tau, r, alpha, n, prob, trace, fidelity, reward
  std::string episode_csv() const;

 private:
  EpisodeConfig cfg_;
  std::shared_ptr<const FockKet> target_;
  DensityOp initial_;  // normalized
  double initial_trace_ = 1.0;
  CounterStream rng_;

  bool started_ = false;
  int step_ = 0;
  DensityOp state_;
  double trace_ = 1.0;
  StepInfo initial_info_;
  std::vector<StepOutput> history_;
};

// Independent environments stepped concurrently. Finished episodes restart
// automatically; the returned observation is then the first of the new episode.
class EnvPool {
 public:
  EnvPool(const EpisodeConfig &cfg, int n_envs, std::uint64_t seed);

  int size() const { return static_cast<int>(envs_.size()); }
  int observation_size() const { return envs_.front().observation_size(); }
  const CubicEnv &env(int i) const { return envs_.at(i); }

  std::vector<Observation> reset_all();
  std::vector<StepOutput> step(const std::vector<RawAction> &actions);

 private:
  std::vector<CubicEnv> envs_;
};

}  // namespace cvforge::env

#endif  // CVFORGE_ENV_ENVIRONMENT_HPP_

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

#include "env/environment.hpp"

#include <algorithm>
#include <cmath>

#include "common/format.hpp"
#include "common/parallel.hpp"
#include "fock/operators.hpp"

namespace cvforge::env {

Observation encode(const DensityOp &rho) {
  require(rho.modes() == 1, ErrorCode::dimension_mismatch, "observations encode one mode");
  const int d = rho.dim();
  const int upper = d * (d - 1) / 2;
  Observation obs(d * d);
  int k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j, ++k) {
      obs(k) = rho.matrix()(i, j).real();
      obs(upper + k) = rho.matrix()(i, j).imag();
    }
  for (int i = 0; i < d; ++i) obs(2 * upper + i) = rho.matrix()(i, i).real();
  return obs;
}

double reward(double trace, const DensityOp &rho_normalized, const FockKet &target,
              const RewardParams &params) {
  require(params.lambda > 0.0, ErrorCode::invalid_parameter, "lambda must be positive");
  require(trace > 0.0 && trace <= 1.0 + 1e-9, ErrorCode::invalid_parameter,
          "trace must lie in (0, 1]");
  double f = std::max(0.0, fock::fidelity_pure(rho_normalized, target));
  if (params.mode == FidelityMode::unnormalized) f *= trace;
  return std::pow(trace, params.lambda / 10.0) * std::pow(f, params.lambda);
}

void EpisodeConfig::validate() const {
  require(m >= 1, ErrorCode::invalid_parameter, "episode length must be at least 1");
  loop.validate();
  require(reward.lambda > 0.0, ErrorCode::invalid_parameter, "lambda must be positive");
}

loop::Action map_action(std::span<const double> raw, const loop::LoopConfig &cfg) {
  require(raw.size() == kActionDim, ErrorCode::dimension_mismatch, "actions have three components");
  for (double x : raw) require(std::isfinite(x), ErrorCode::numeric, "action is not finite");
  auto clip = [](double x) { return std::clamp(x, -1.0, 1.0); };
  return loop::Action{(clip(raw[0]) + 1.0) / 2.0, clip(raw[1]) * cfg.r_max,
                      clip(raw[2]) * cfg.alpha_max};
}

CubicEnv::CubicEnv(EpisodeConfig cfg, std::uint64_t seed, std::shared_ptr<const FockKet> target)
    : cfg_(std::move(cfg)), target_(std::move(target)) {
  cfg_.validate();
  if (!target_)
    target_ = std::make_shared<const FockKet>(loop::target_cubic(
        cfg_.target.gamma, cfg_.target.r, cfg_.target.alpha, cfg_.loop.dim, cfg_.loop.pad));
  require(target_->dim() == cfg_.loop.dim, ErrorCode::dimension_mismatch,
          "target dimension does not match the loop");
  const DensityOp raw = loop::initial_state(cfg_.loop);
  initial_trace_ = raw.trace();
  initial_ = raw.scaled(1.0 / initial_trace_);
  rng_ = CounterStream::derive(seed, 0);
}

Observation CubicEnv::reset(std::uint64_t seed) {
  rng_ = CounterStream::derive(seed, 0);
  return reset();
}

Observation CubicEnv::reset() {
  started_ = true;
  step_ = 0;
  state_ = initial_;
  trace_ = initial_trace_;
  history_.clear();
  initial_info_ = StepInfo{};
  initial_info_.trace = trace_;
  initial_info_.fidelity = fock::fidelity_pure(state_, *target_);
  return encode(state_);
}

StepOutput CubicEnv::step(std::span<const double> raw) {
  require(started_, ErrorCode::lifecycle, "reset must be called before step");
  require(!done(), ErrorCode::lifecycle, "episode is over; call reset");
  const loop::Action a = map_action(raw, cfg_.loop);
  loop::StepResult res = loop::loop_step(state_, a, cfg_.loop, &rng_, std::nullopt, target_.get());
  state_ = std::move(res.state);
  trace_ *= res.record.trace_after;
  ++step_;

  StepOutput out;
  out.obs = encode(state_);
  require(out.obs.allFinite(), ErrorCode::numeric, "observation is not finite");
  out.done = done();
  out.info.n = res.record.outcome_n;
  out.info.prob = res.record.outcome_prob;
  out.info.trace = trace_;
  out.info.fidelity = res.record.fidelity_after;
  out.info.action = a;
  if (!cfg_.terminal_reward_only || out.done)
    out.reward = reward(std::min(trace_, 1.0), state_, *target_, cfg_.reward);
  history_.push_back(out);
  return out;
}

std::string CubicEnv::episode_csv() const {
  CsvWriter csv({"step", "tau", "r", "alpha", "n", "prob", "trace", "fidelity", "reward"});
  for (std::size_t j = 0; j < history_.size(); ++j) {
    const StepOutput &s = history_[j];
    csv.row({std::to_string(j + 1), format_double(s.info.action.tau),
             format_double(s.info.action.r), format_double(s.info.action.alpha),
             std::to_string(s.info.n), format_double(s.info.prob), format_double(s.info.trace),
             format_double(s.info.fidelity), format_double(s.reward)});
  }
  return csv.str();
}

EnvPool::EnvPool(const EpisodeConfig &cfg, int n_envs, std::uint64_t seed) {
  require(n_envs >= 1, ErrorCode::invalid_parameter, "pool needs at least one environment");
  cfg.validate();
  auto target = std::make_shared<const FockKet>(
      loop::target_cubic(cfg.target.gamma, cfg.target.r, cfg.target.alpha, cfg.loop.dim, cfg.loop.pad));
  envs_.reserve(n_envs);
  for (int i = 0; i < n_envs; ++i)
    envs_.emplace_back(cfg, mix64(seed) ^ mix64(0x9e37ULL + static_cast<std::uint64_t>(i)), target);
}

std::vector<Observation> EnvPool::reset_all() {
  std::vector<Observation> obs(envs_.size());
  for (std::size_t i = 0; i < envs_.size(); ++i) obs[i] = envs_[i].reset();
  return obs;
}

std::vector<StepOutput> EnvPool::step(const std::vector<RawAction> &actions) {
  require(actions.size() == envs_.size(), ErrorCode::dimension_mismatch,
          "one action per environment is required");
  std::vector<StepOutput> out(envs_.size());
  parallel_for(envs_.size(), [&](std::size_t i) {
    out[i] = envs_[i].step(actions[i]);
    if (out[i].done) out[i].obs = envs_[i].reset();
  });
  return out;
}

}  // namespace cvforge::env

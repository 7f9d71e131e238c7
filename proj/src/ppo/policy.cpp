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

#include "ppo/policy.hpp"

#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace cvforge::ppo {
namespace {

const double kLog2Pi = std::log(2.0 * std::numbers::pi);

std::vector<int> layer_sizes(int in, const std::vector<int> &hidden, int out) {
  std::vector<int> s{in};
  s.insert(s.end(), hidden.begin(), hidden.end());
  s.push_back(out);
  return s;
}

}  // namespace

Policy::Policy(PolicyShape shape)
    : shape_(std::move(shape)),
      actor_(layer_sizes(shape_.obs_dim, shape_.hidden, shape_.act_dim)),
      critic_(layer_sizes(shape_.obs_dim, shape_.hidden, 1)),
      theta_(RVector::Zero(actor_.param_count() + critic_.param_count() + shape_.act_dim)) {}

Eigen::Map<const RVector> Policy::log_std() const {
  return Eigen::Map<const RVector>(theta_.data() + log_std_offset(), shape_.act_dim);
}

Eigen::Map<RVector> Policy::log_std() {
  return Eigen::Map<RVector>(theta_.data() + log_std_offset(), shape_.act_dim);
}

void Policy::initialize(std::uint64_t seed) {
  CounterStream rng = CounterStream::derive(seed, 0x1a17);
  actor_.init_orthogonal(theta_.data() + actor_offset(), std::sqrt(2.0), 0.01, rng);
  critic_.init_orthogonal(theta_.data() + critic_offset(), std::sqrt(2.0), 1.0, rng);
  log_std().setZero();
}

RMatrix Policy::mean(const RMatrix &obs) const {
  return actor_.forward(theta_.data() + actor_offset(), obs);
}

RVector Policy::value(const RMatrix &obs) const {
  return critic_.forward(theta_.data() + critic_offset(), obs).row(0).transpose();
}

RVector Policy::log_prob(const RMatrix &mean, const RMatrix &actions) const {
  const RVector ls = log_std();
  const RVector inv_var = (-2.0 * ls).array().exp();
  RVector out(actions.cols());
  const double norm = ls.sum() + 0.5 * shape_.act_dim * kLog2Pi;
  for (Eigen::Index b = 0; b < actions.cols(); ++b)
    out(b) = -0.5 * ((actions.col(b) - mean.col(b)).array().square() * inv_var.array()).sum() - norm;
  return out;
}

double Policy::entropy() const {
  return log_std().sum() + 0.5 * shape_.act_dim * (1.0 + kLog2Pi);
}

Policy::Act Policy::act(const RMatrix &obs, CounterStream *rng, bool deterministic) const {
  Act out;
  const RMatrix mu = mean(obs);
  out.actions = mu;
  if (!deterministic) {
    require(rng != nullptr, ErrorCode::invalid_parameter, "sampling needs a random stream");
    const RVector sd = log_std().array().exp();
    for (Eigen::Index b = 0; b < mu.cols(); ++b)
      for (int k = 0; k < shape_.act_dim; ++k) out.actions(k, b) += sd(k) * rng->normal();
  }
  out.log_prob = log_prob(mu, out.actions);
  out.value = value(obs);
  return out;
}

Policy::Eval Policy::evaluate(const RMatrix &obs, const RMatrix &actions) const {
  require(actions.rows() == shape_.act_dim && actions.cols() == obs.cols(),
          ErrorCode::dimension_mismatch, "actions do not match observations");
  Eval out;
  out.log_prob = log_prob(mean(obs), actions);
  out.entropy = RVector::Constant(obs.cols(), entropy());
  out.value = value(obs);
  return out;
}

}  // namespace cvforge::ppo

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

#ifndef CVFORGE_PPO_POLICY_HPP_
#define CVFORGE_PPO_POLICY_HPP_

#include <cstdint>
#include <vector>

#include "ppo/mlp.hpp"

namespace cvforge::ppo {

struct PolicyShape {
  int obs_dim = 961;
  std::vector<int> hidden{256, 128, 64};
  int act_dim = 3;
};

// Diagonal Gaussian actor with a state-independent log standard deviation and
// a separate critic. All parameters share one flat vector:
// [actor | critic | log_std].
class Policy {
 public:
  Policy() = default;
  explicit Policy(PolicyShape shape);

  const PolicyShape &shape() const { return shape_; }
  const Mlp &actor() const { return actor_; }
  const Mlp &critic() const { return critic_; }

  RVector &params() { return theta_; }
  const RVector &params() const { return theta_; }
  Eigen::Index actor_offset() const { return 0; }
  Eigen::Index critic_offset() const { return actor_.param_count(); }
  Eigen::Index log_std_offset() const { return actor_.param_count() + critic_.param_count(); }

  Eigen::Map<const RVector> log_std() const;
  Eigen::Map<RVector> log_std();

  // Orthogonal init (sqrt 2 hidden, 0.01 actor head, 1 critic head), log_std = 0.
  void initialize(std::uint64_t seed);

  RMatrix mean(const RMatrix &obs) const;
  RVector value(const RMatrix &obs) const;

  struct Act {
    RMatrix actions;  // act_dim x batch, unclipped
    RVector log_prob;
    RVector value;
  };
  Act act(const RMatrix &obs, CounterStream *rng, bool deterministic = false) const;

  struct Eval {
    RVector log_prob;
    RVector entropy;
    RVector value;
  };
  Eval evaluate(const RMatrix &obs, const RMatrix &actions) const;

  RVector log_prob(const RMatrix &mean, const RMatrix &actions) const;
  double entropy() const;

 private:
  PolicyShape shape_;
  Mlp actor_;
  Mlp critic_;
  RVector theta_;
};

}  // namespace cvforge::ppo

#endif  // CVFORGE_PPO_POLICY_HPP_

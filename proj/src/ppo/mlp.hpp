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

#ifndef CVFORGE_PPO_MLP_HPP_
#define CVFORGE_PPO_MLP_HPP_

#include <vector>

#include <Eigen/Dense>

#include "common/rng.hpp"

namespace cvforge::ppo {

using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using ConstMatrixMap = Eigen::Map<const RMatrix>;
using MatrixMap = Eigen::Map<RMatrix>;

// Fully connected network with tanh on hidden layers and a linear output.
// Parameters live in a caller-owned flat array: for each layer the weight
// matrix (out x in, column-major) followed by its bias. Inputs are batches
// stored one sample per column.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<int> sizes);

  const std::vector<int> &sizes() const { return sizes_; }
  int layers() const { return static_cast<int>(sizes_.size()) - 1; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  Eigen::Index param_count() const { return offsets_.back(); }

  ConstMatrixMap weight(const double *theta, int layer) const;
  MatrixMap weight(double *theta, int layer) const;
  Eigen::Map<const RVector> bias(const double *theta, int layer) const;
  Eigen::Map<RVector> bias(double *theta, int layer) const;

  struct Cache {
    std::vector<RMatrix> acts;  // acts[0] is the input, acts[l] the output of layer l
  };

  RMatrix forward(const double *theta, const RMatrix &x, Cache *cache = nullptr) const;

  // Accumulates parameter gradients into grad (same layout as theta). The
  // input gradient is written to dx when non-null.
  void backward(const double *theta, const Cache &cache, const RMatrix &dy, double *grad,
                RMatrix *dx = nullptr) const;

  // Orthogonal weights scaled by hidden_gain (hidden layers) or out_gain
  // (last layer); zero biases.
  void init_orthogonal(double *theta, double hidden_gain, double out_gain,
                       CounterStream &rng) const;

 private:
  std::vector<int> sizes_;
  std::vector<Eigen::Index> offsets_;  // start of each layer's weights, plus the total
};

// Orthogonal (rows x cols) matrix from a Gaussian draw, sign-fixed QR.
RMatrix orthogonal_matrix(int rows, int cols, CounterStream &rng);

}  // namespace cvforge::ppo

#endif  // CVFORGE_PPO_MLP_HPP_

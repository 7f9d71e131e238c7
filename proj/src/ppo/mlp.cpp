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

#include "ppo/mlp.hpp"

#include "common/error.hpp"

namespace cvforge::ppo {

Mlp::Mlp(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  require(sizes_.size() >= 2, ErrorCode::invalid_parameter, "network needs input and output sizes");
  for (int s : sizes_) require(s >= 1, ErrorCode::invalid_parameter, "layer sizes must be positive");
  offsets_.push_back(0);
  for (int l = 0; l < layers(); ++l)
    offsets_.push_back(offsets_.back() +
                       static_cast<Eigen::Index>(sizes_[l + 1]) * (sizes_[l] + 1));
}

ConstMatrixMap Mlp::weight(const double *theta, int layer) const {
  return ConstMatrixMap(theta + offsets_[layer], sizes_[layer + 1], sizes_[layer]);
}

MatrixMap Mlp::weight(double *theta, int layer) const {
  return MatrixMap(theta + offsets_[layer], sizes_[layer + 1], sizes_[layer]);
}

Eigen::Map<const RVector> Mlp::bias(const double *theta, int layer) const {
  const Eigen::Index w = static_cast<Eigen::Index>(sizes_[layer + 1]) * sizes_[layer];
  return Eigen::Map<const RVector>(theta + offsets_[layer] + w, sizes_[layer + 1]);
}

Eigen::Map<RVector> Mlp::bias(double *theta, int layer) const {
  const Eigen::Index w = static_cast<Eigen::Index>(sizes_[layer + 1]) * sizes_[layer];
  return Eigen::Map<RVector>(theta + offsets_[layer] + w, sizes_[layer + 1]);
}

RMatrix Mlp::forward(const double *theta, const RMatrix &x, Cache *cache) const {
  require(x.rows() == input_size(), ErrorCode::dimension_mismatch, "network input has wrong size");
  if (cache) {
    cache->acts.resize(layers() + 1);
    cache->acts[0] = x;
  }
  RMatrix a = x;
  for (int l = 0; l < layers(); ++l) {
    RMatrix z = weight(theta, l) * a;
    z.colwise() += bias(theta, l);
    if (l + 1 < layers()) z = z.array().tanh().matrix();
    a = std::move(z);
    if (cache) cache->acts[l + 1] = a;
  }
  return a;
}

void Mlp::backward(const double *theta, const Cache &cache, const RMatrix &dy, double *grad,
                   RMatrix *dx) const {
  require(static_cast<int>(cache.acts.size()) == layers() + 1, ErrorCode::lifecycle,
          "backward needs a forward cache");
  require(dy.rows() == output_size() && dy.cols() == cache.acts[0].cols(),
          ErrorCode::dimension_mismatch, "output gradient has wrong shape");
  RMatrix delta = dy;
  for (int l = layers() - 1; l >= 0; --l) {
    if (l + 1 < layers()) delta.array() *= 1.0 - cache.acts[l + 1].array().square();
    weight(grad, l).noalias() += delta * cache.acts[l].transpose();
    bias(grad, l) += delta.rowwise().sum();
    if (l > 0 || dx) {
      RMatrix prev = weight(theta, l).transpose() * delta;
      if (l == 0) {
        *dx = std::move(prev);
        break;
      }
      delta = std::move(prev);
    }
  }
}

RMatrix orthogonal_matrix(int rows, int cols, CounterStream &rng) {
  const bool flip = rows < cols;
  const int r = flip ? cols : rows, c = flip ? rows : cols;
  RMatrix g(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ() * RMatrix::Identity(r, c);
  const RMatrix rr = qr.matrixQR().topRows(c).triangularView<Eigen::Upper>();
  for (int j = 0; j < c; ++j)
    if (rr(j, j) < 0) q.col(j) *= -1.0;
  return flip ? RMatrix(q.transpose()) : q;
}

void Mlp::init_orthogonal(double *theta, double hidden_gain, double out_gain,
                          CounterStream &rng) const {
  for (int l = 0; l < layers(); ++l) {
    const double gain = l + 1 < layers() ? hidden_gain : out_gain;
    weight(theta, l) = gain * orthogonal_matrix(sizes_[l + 1], sizes_[l], rng);
    bias(theta, l).setZero();
  }
}

}  // namespace cvforge::ppo

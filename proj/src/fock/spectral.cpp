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

#include "fock/spectral.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "fock/operators.hpp"

namespace cvforge::fock {
namespace {

Spectrum diagonalize(const CMatrix &hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  require(solver.info() == Eigen::Success, ErrorCode::numeric, "eigendecomposition failed");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum build(Generator gen, int size) {
  const CMatrix a = ladder_matrix(size);
  const CMatrix ad = a.adjoint();
  const Complex i(0.0, 1.0);
  switch (gen) {
    case Generator::position:
      return diagonalize((a + ad) / std::sqrt(2.0));
    case Generator::momentum:
      return diagonalize(i * (ad - a) / std::sqrt(2.0));
    case Generator::squeeze:
      return diagonalize(0.5 * i * (a * a - ad * ad));
  }
  fail(ErrorCode::invalid_parameter, "unknown generator");
}

BeamsplitterSpectrum build_beamsplitter(int dim) {
  BeamsplitterSpectrum out;
  out.dim = dim;
  for (int total = 0; total <= 2 * (dim - 1); ++total) {
    PhotonBlock block;
    block.total = total;
    for (int i = std::max(0, total - dim + 1); i <= std::min(total, dim - 1); ++i)
      block.first_mode.push_back(i);
    const int b = total + 1;
    // K|i, N-i> = sqrt(i+1) sqrt(N-i) |i+1, N-i-1> - sqrt(i) sqrt(N-i+1) |i-1, N-i+1>
    CMatrix k = CMatrix::Zero(b, b);
    for (int i = 0; i < b; ++i) {
      const int j = total - i;
      if (i + 1 < b) k(i + 1, i) = std::sqrt(double(i + 1) * j);
      if (i > 0) k(i - 1, i) = -std::sqrt(double(i) * (j + 1));
    }
    block.spec = diagonalize(Complex(0.0, 1.0) * k);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

template <typename Key, typename Value>
class Memo {
 public:
  template <typename Make>
  const Value &get(const Key &key, Make make) {
    {
      std::shared_lock lock(mutex_);
      auto it = items_.find(key);
      if (it != items_.end()) return *it->second;
    }
    auto fresh = std::make_unique<Value>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = items_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<Value>> items_;
};

}  // namespace

CMatrix Spectrum::evolve(double t) const {
  const CVector phases = (values * (-t)).unaryExpr([](double x) { return std::polar(1.0, x); });
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

const Spectrum &spectrum(Generator gen, int size) {
  require(size >= 2, ErrorCode::invalid_dimension, "generator size must be at least 2");
  static Memo<std::pair<int, int>, Spectrum> memo;
  return memo.get({static_cast<int>(gen), size}, [&] { return build(gen, size); });
}

const BeamsplitterSpectrum &beamsplitter_spectrum(int dim) {
  require(dim >= 1, ErrorCode::invalid_dimension, "beamsplitter dimension must be positive");
  static Memo<int, BeamsplitterSpectrum> memo;
  return memo.get(dim, [&] { return build_beamsplitter(dim); });
}

}  // namespace cvforge::fock

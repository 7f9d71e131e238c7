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

#include "fock/types.hpp"

#include <cmath>
#include <string>

namespace cvforge::fock {

FockKet FockKet::vacuum(int dim) { return number(dim, 0); }

FockKet FockKet::number(int dim, int n) {
  require(dim >= 1, ErrorCode::invalid_dimension, "ket dimension must be positive");
  require(n >= 0 && n < dim, ErrorCode::invalid_parameter,
          "photon number " + std::to_string(n) + " outside truncation");
  CVector v = CVector::Zero(dim);
  v(n) = 1.0;
  return FockKet(std::move(v));
}

bool FockKet::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

FockKet FockKet::normalized() const {
  const double n = norm();
  require(n > 0.0, ErrorCode::numeric, "cannot normalize a zero ket");
  return FockKet(amplitudes / n);
}

DensityOp::DensityOp(int mode_dim, int modes, CMatrix matrix)
    : dim_(mode_dim), modes_(modes), matrix_(std::move(matrix)) {
  require(mode_dim >= 1, ErrorCode::invalid_dimension, "mode dimension must be positive");
  require(modes == 1 || modes == 2, ErrorCode::invalid_dimension, "only one or two modes");
  const Eigen::Index expected = modes == 1 ? mode_dim : mode_dim * mode_dim;
  require(matrix_.rows() == expected && matrix_.cols() == expected,
          ErrorCode::dimension_mismatch, "density matrix shape does not match mode dimension");
}

DensityOp DensityOp::from_ket(const FockKet &ket) {
  return DensityOp(ket.dim(), 1, ket.amplitudes * ket.amplitudes.adjoint());
}

DensityOp DensityOp::from_two_mode_ket(int mode_dim, const CVector &amplitudes) {
  require(amplitudes.size() == static_cast<Eigen::Index>(mode_dim) * mode_dim,
          ErrorCode::dimension_mismatch, "two-mode ket has wrong length");
  return DensityOp(mode_dim, 2, amplitudes * amplitudes.adjoint());
}

void DensityOp::hermitize() {
  CMatrix h = 0.5 * (matrix_ + matrix_.adjoint());
  matrix_ = std::move(h);
}

DensityOp DensityOp::scaled(double factor) const {
  return DensityOp(dim_, modes_, matrix_ * factor);
}

}  // namespace cvforge::fock

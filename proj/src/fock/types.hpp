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

#ifndef CVFORGE_FOCK_TYPES_HPP_
#define CVFORGE_FOCK_TYPES_HPP_

#include <complex>

#include <Eigen/Dense>

#include "common/error.hpp"

namespace cvforge::fock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr int kDefaultPad = 20;

// State vector in the truncated photon-number basis |0>..|dim-1>.
struct FockKet {
  CVector amplitudes;

  FockKet() = default;
  explicit FockKet(CVector amps) : amplitudes(std::move(amps)) {}

  static FockKet vacuum(int dim);
  static FockKet number(int dim, int n);

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = 1e-9) const;
  FockKet normalized() const;
};

// Density operator of one or two modes. Two-mode matrices use the Kronecker
// ordering mode 0 (loop/data) major, mode 1 minor: index = i * dim + j.
class DensityOp {
 public:
  DensityOp() = default;
  DensityOp(int mode_dim, int modes, CMatrix matrix);

  static DensityOp from_ket(const FockKet &ket);
  static DensityOp from_two_mode_ket(int mode_dim, const CVector &amplitudes);

  int dim() const { return dim_; }
  int modes() const { return modes_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix &matrix() const { return matrix_; }

  double trace() const { return matrix_.trace().real(); }

  // Replace the matrix by its Hermitian part.
  void hermitize();
  DensityOp scaled(double factor) const;

 private:
  int dim_ = 0;
  int modes_ = 1;
  CMatrix matrix_;
};

// A gate in the Fock basis. `unitary` is false for gates cropped from a
// padded construction, which are only sub-unitary.
struct GateMatrix {
  int dim = 0;
  int modes = 1;
  CMatrix matrix;
  bool unitary = true;
};

}  // namespace cvforge::fock

#endif  // CVFORGE_FOCK_TYPES_HPP_

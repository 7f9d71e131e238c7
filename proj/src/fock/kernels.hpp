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

#ifndef CVFORGE_FOCK_KERNELS_HPP_
#define CVFORGE_FOCK_KERNELS_HPP_

#include <vector>

#include "fock/types.hpp"

// Matrix-free versions of the gates in operators.hpp. They act on kets and on
// two-mode amplitude matrices psi(i, j) = <i, j|psi> and agree with the dense
// gates to rounding; the hot loops (episodes, scans, Wigner grids) use these.
namespace cvforge::fock {

CVector displace(const CVector &v, Complex alpha, int pad = kDefaultPad);
CVector squeeze(const CVector &v, double r, int pad = kDefaultPad);
CVector squeezed_vacuum(double r, int dim, int pad = kDefaultPad);
CVector phase_poly(const CVector &v, double coeff, int power);

void beamsplitter_inplace(CMatrix &psi, double tau);
void cz_inplace(CMatrix &psi);
// psi <- (I (x) gate) psi, i.e. the gate acts on the column index.
void apply_on_mode1(CMatrix &psi, const CMatrix &gate);

CVector flatten(const CMatrix &psi);
CMatrix unflatten(const CVector &v, int dim);

// rho = sum_k |v_k><v_k| with the weights folded into the columns; components
// below rel_cutoff * largest eigenvalue are dropped.
CMatrix purify_columns(const CMatrix &rho, double rel_cutoff = 1e-15);

// Photon counting on mode 1 of a mixture of two-mode kets.
class AncillaReadout {
 public:
  AncillaReadout(std::vector<CMatrix> branches, double eta);

  const RVector &probs() const { return probs_; }
  double total() const { return probs_.sum(); }
  int dim() const { return dim_; }

  // Unnormalized mode-0 state for reported count n.
  DensityOp conditioned(int n) const;
  // Mode-0 reduced state before measurement.
  DensityOp reduced() const;

 private:
  int dim_ = 0;
  std::vector<CMatrix> branches_;
  RMatrix weights_;
  RVector probs_;
};

}  // namespace cvforge::fock

#endif  // CVFORGE_FOCK_KERNELS_HPP_

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

#ifndef CVFORGE_FOCK_OPERATORS_HPP_
#define CVFORGE_FOCK_OPERATORS_HPP_

#include <utility>

#include "fock/types.hpp"

namespace cvforge::fock {

// Annihilation operator matrix, a[m, n] = sqrt(n) delta_{m, n-1}. No
// dimension check; used internally for generator construction.
CMatrix ladder_matrix(int dim);

std::pair<GateMatrix, GateMatrix> ladder_ops(int dim);
GateMatrix quadrature_q(int dim);
GateMatrix quadrature_p(int dim);
GateMatrix number_operator(int dim);

// Single-mode gates that change photon number are exponentiated at dim + pad
// and cropped to dim x dim; pad = 0 yields an exactly unitary matrix.
GateMatrix gate_displacement(Complex alpha, int dim, int pad = kDefaultPad);
GateMatrix gate_squeeze(double r, int dim, int pad = kDefaultPad);

// Two-mode gates, exact in the truncated space.
GateMatrix gate_beamsplitter(double tau, int dim);
GateMatrix gate_cz(int dim);

// exp(i coeff Q^power) with Q the truncated position quadrature.
GateMatrix gate_phase_poly(double coeff, int power, int dim);

// Lifts a single-mode gate onto `mode` (0 or 1) of a two-mode space.
GateMatrix on_mode(const GateMatrix &gate, int mode);

inline constexpr double kMaxSqueeze = 3.0;

CMatrix tensor(const CMatrix &a, const CMatrix &b);
DensityOp tensor(const DensityOp &a, const DensityOp &b);
DensityOp partial_trace(const DensityOp &rho, int keep);

FockKet apply(const GateMatrix &gate, const FockKet &ket);
DensityOp conjugate(const GateMatrix &gate, const DensityOp &rho);

// Lossy photon-number-resolving detector: POVM weight of true count m for
// reported count n, C(m, n) eta^n (1 - eta)^(m - n).
RMatrix pnr_weights(int dim, double eta);

RVector pnr_outcome_probs(const DensityOp &rho, int measured, double eta);

struct Conditioned {
  DensityOp state;  // unnormalized
  double prob = 0.0;
};

Conditioned pnr_condition(const DensityOp &rho, int measured, int n, double eta);

double fidelity_pure(const DensityOp &rho, const FockKet &target);
double trace(const DensityOp &rho);
RVector photon_distribution(const DensityOp &rho);
RVector photon_distribution(const FockKet &ket);

double expectation(const DensityOp &rho, const CMatrix &op);

// Largest |U^dagger U - I| entry.
double unitarity_error(const CMatrix &u);

}  // namespace cvforge::fock

#endif  // CVFORGE_FOCK_OPERATORS_HPP_

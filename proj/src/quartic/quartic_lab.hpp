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

#ifndef CVFORGE_QUARTIC_QUARTIC_LAB_HPP_
#define CVFORGE_QUARTIC_QUARTIC_LAB_HPP_

#include <numbers>
#include <vector>

#include "fock/kernels.hpp"
#include "fock/types.hpp"
#include "quartic/nelder_mead.hpp"

namespace cvforge::quartic {

using fock::Complex;
using fock::DensityOp;
using fock::FockKet;

struct QuarticConfig {
  int dim = 60;
  double r = 1.38;
  double alpha_mag = 4.5;
  double phi1 = std::numbers::pi;
  double phi2 = -0.2;
  double eta = 1.0;
  int pad = fock::kDefaultPad;
  // Squeeze the data and ancilla modes in momentum, i.e. apply S(-r).
  bool p_squeezed = true;

  int n_max = 40;
  bool postselect_equal = true;
  int top_k = 10;           // records that get fits and a Wigner scan; negative fits all
  double min_prob = 1e-12;  // outcomes below this are listed but never conditioned
  double wigner_window = 6.0;
  int wigner_points = 61;

  void validate() const;
  double signed_r() const { return p_squeezed ? -r : r; }
  Complex alpha1() const { return std::polar(alpha_mag, phi1); }
  Complex alpha2() const { return std::polar(alpha_mag, phi2); }
};

struct FitResult {
  std::vector<double> params;  // (delta, s) or (Re alpha, Im alpha, s)
  double fidelity = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct OutcomeRecord {
  int n1 = 0;
  int n2 = 0;
  double joint_prob = 0.0;
  DensityOp state;  // normalized; empty for records that were not conditioned
  bool fitted = false;
  FitResult quartic;
  FitResult baseline;
  double wigner_min = 0.0;
};

struct RoundResult {
  DensityOp state;  // renormalized
  double prob = 0.0;
};

// Couple a fresh ancilla S(ancilla_r)|0> to the data mode with C_Z, displace
// the ancilla by alpha and read it out with the configured detector.
fock::AncillaReadout cluster_readout(const DensityOp &data, double ancilla_r, Complex alpha,
                                     const QuarticConfig &cfg);

RoundResult cluster_round(const DensityOp &data, double ancilla_r, Complex alpha, int n,
                          const QuarticConfig &cfg);

DensityOp quartic_input(const QuarticConfig &cfg);

// Both rounds for a fixed outcome pair, without fitting.
OutcomeRecord run_quartic(const QuarticConfig &cfg, int n1, int n2);

// Fill fits and the Wigner minimum of a conditioned record.
void analyze_record(OutcomeRecord &rec, const QuarticConfig &cfg);

std::vector<OutcomeRecord> scan_outcomes(const QuarticConfig &cfg);

FockKet target_quartic(double delta, double s, int dim, int pad = fock::kDefaultPad);

FitResult fit_quartic(const DensityOp &state, int pad = fock::kDefaultPad);
FitResult fit_displaced_squeezed(const DensityOp &state, int pad = fock::kDefaultPad);

}  // namespace cvforge::quartic

#endif  // CVFORGE_QUARTIC_QUARTIC_LAB_HPP_

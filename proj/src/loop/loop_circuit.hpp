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

#ifndef CVFORGE_LOOP_LOOP_CIRCUIT_HPP_
#define CVFORGE_LOOP_LOOP_CIRCUIT_HPP_

#include <optional>
#include <string>

#include "common/rng.hpp"
#include "fock/kernels.hpp"
#include "fock/types.hpp"

namespace cvforge::loop {

using fock::Complex;
using fock::DensityOp;
using fock::FockKet;

enum class DisplacementAxis { imaginary, real };

// One setting of the loop: beamsplitter transmittivity, ancilla squeezing and
// in-loop displacement magnitude.
struct Action {
  double tau = 0.0;
  double r = 0.0;
  double alpha = 0.0;
};

struct LoopConfig {
  int dim = 31;
  int pad = fock::kDefaultPad;
  Complex beta{0.0, 2.5};
  double eta = 1.0;
  double r0 = 1.15;
  DisplacementAxis displacement_axis = DisplacementAxis::imaginary;
  double r_max = 1.15;
  double alpha_max = 2.25;

  void validate() const;
  void validate(const Action &a) const;
};

struct StepRecord {
  Action action;
  int outcome_n = 0;
  double outcome_prob = 0.0;  // probability of the recorded count
  double trace_after = 0.0;   // mass kept in the truncation before renormalizing
  double fidelity_after = 0.0;
};

struct StepResult {
  DensityOp state;  // renormalized
  StepRecord record;
};

// S(r0)|0><0|S(r0)^dag built with padding; trace slightly below one.
DensityOp initial_state(const LoopConfig &cfg);

// The two-mode state just before photon counting, held as a readout on the
// ancilla-output mode.
fock::AncillaReadout loop_readout(const DensityOp &rho, const Action &a, const LoopConfig &cfg);

// Outcome is drawn from `rng`, or taken from `forced_n` when given.
StepResult loop_step(const DensityOp &rho, const Action &a, const LoopConfig &cfg,
                     CounterStream *rng, std::optional<int> forced_n = std::nullopt,
                     const FockKet *target = nullptr);

FockKet target_cubic(double gamma, double r, Complex alpha, int dim, int pad = fock::kDefaultPad);

// Probability mass of the padded construction that stays inside dim photons.
double target_cubic_occupation(double gamma, double r, Complex alpha, int dim,
                               int pad = fock::kDefaultPad);

struct SuccessThresholds {
  double min_fidelity = 0.95;
  double min_trace = 0.98;
  double max_wigner_min = -0.01;
  double window = 5.0;
  int points = 61;
};

struct SuccessReport {
  bool success = false;
  double fidelity = 0.0;
  double trace = 0.0;
  double wigner_min = 0.0;
  bool wigner_checked = false;
  std::string reason;
};

// Fidelity is taken on the normalized state; trace on the state as given.
// The Wigner grid is only evaluated when the first two checks pass.
SuccessReport success_check(const DensityOp &rho, const FockKet &target,
                            const SuccessThresholds &th = {});

}  // namespace cvforge::loop

#endif  // CVFORGE_LOOP_LOOP_CIRCUIT_HPP_

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

#include "loop/loop_circuit.hpp"

#include <cmath>
#include <vector>

#include "fock/operators.hpp"
#include "fock/wigner.hpp"

namespace cvforge::loop {

using fock::CMatrix;
using fock::CVector;

void LoopConfig::validate() const {
  require(dim >= 2, ErrorCode::invalid_dimension, "loop dimension must be at least 2");
  require(pad >= 0, ErrorCode::invalid_parameter, "pad must be non-negative");
  require(eta > 0.0 && eta <= 1.0, ErrorCode::invalid_parameter,
          "detector efficiency must lie in (0, 1]");
  require(r_max >= 0.0 && alpha_max >= 0.0, ErrorCode::invalid_parameter,
          "action bounds must be non-negative");
  require(std::abs(r0) <= fock::kMaxSqueeze, ErrorCode::truncation_risk,
          "initial squeezing too large");
}

void LoopConfig::validate(const Action &a) const {
  constexpr double slack = 1e-12;
  require(a.tau >= 0.0 && a.tau <= 1.0, ErrorCode::invalid_parameter,
          "tau must lie in [0, 1]");
  require(std::abs(a.r) <= r_max + slack, ErrorCode::invalid_parameter,
          "squeezing outside action bounds");
  require(std::abs(a.alpha) <= alpha_max + slack, ErrorCode::invalid_parameter,
          "displacement outside action bounds");
}

DensityOp initial_state(const LoopConfig &cfg) {
  cfg.validate();
  return DensityOp::from_ket(FockKet(fock::squeezed_vacuum(cfg.r0, cfg.dim, cfg.pad)));
}

fock::AncillaReadout loop_readout(const DensityOp &rho, const Action &a, const LoopConfig &cfg) {
  cfg.validate();
  cfg.validate(a);
  require(rho.modes() == 1 && rho.dim() == cfg.dim, ErrorCode::dimension_mismatch,
          "loop state does not match configured dimension");
  const Complex alpha = cfg.displacement_axis == DisplacementAxis::imaginary
                            ? Complex(0.0, a.alpha)
                            : Complex(a.alpha, 0.0);
  const CVector ancilla = fock::squeezed_vacuum(a.r, cfg.dim, cfg.pad);
  const CMatrix detect = fock::gate_displacement(cfg.beta, cfg.dim, cfg.pad).matrix;
  const CMatrix comps = fock::purify_columns(rho.matrix());

  std::vector<CMatrix> branches;
  branches.reserve(comps.cols());
  for (Eigen::Index k = 0; k < comps.cols(); ++k) {
    const CVector loop = fock::displace(comps.col(k), alpha, cfg.pad);
    CMatrix psi = loop * ancilla.transpose();
    fock::beamsplitter_inplace(psi, a.tau);
    fock::apply_on_mode1(psi, detect);
    branches.push_back(std::move(psi));
  }
  return fock::AncillaReadout(std::move(branches), cfg.eta);
}

StepResult loop_step(const DensityOp &rho, const Action &a, const LoopConfig &cfg,
                     CounterStream *rng, std::optional<int> forced_n, const FockKet *target) {
  const fock::AncillaReadout readout = loop_readout(rho, a, cfg);
  const fock::RVector &probs = readout.probs();
  const double total = readout.total();
  require(total > 1e-12, ErrorCode::zero_probability, "no probability mass left in truncation");

  int n = 0;
  if (forced_n) {
    n = *forced_n;
    require(n >= 0 && n < cfg.dim, ErrorCode::invalid_parameter, "forced outcome outside truncation");
  } else {
    require(rng != nullptr, ErrorCode::invalid_parameter, "loop_step needs a random stream");
    const double u = rng->uniform() * total;
    double acc = 0.0;
    n = cfg.dim - 1;
    for (int k = 0; k < cfg.dim; ++k) {
      acc += probs(k);
      if (u < acc) {
        n = k;
        break;
      }
    }
    // Skip zero-weight tail entries reached through rounding.
    while (n > 0 && probs(n) <= 0.0) --n;
  }
  require(probs(n) >= 1e-12, ErrorCode::zero_probability,
          "outcome n=" + std::to_string(n) + " has vanishing probability");

  DensityOp next = readout.conditioned(n).scaled(1.0 / probs(n));
  next.hermitize();

  StepRecord rec;
  rec.action = a;
  rec.outcome_n = n;
  rec.outcome_prob = probs(n);
  rec.trace_after = total;
  if (target) rec.fidelity_after = fock::fidelity_pure(next, *target);
  return StepResult{std::move(next), rec};
}

FockKet target_cubic(double gamma, double r, Complex alpha, int dim, int pad) {
  const FockKet raw(fock::displace(
      fock::phase_poly(fock::squeezed_vacuum(r, dim, pad), gamma, 3), alpha, pad));
  return raw.normalized();
}

double target_cubic_occupation(double gamma, double r, Complex alpha, int dim, int pad) {
  require(dim >= 2, ErrorCode::invalid_dimension, "dimension must be at least 2");
  const int big = dim + pad;
  const CVector v =
      fock::displace(fock::phase_poly(fock::squeezed_vacuum(r, big, pad), gamma, 3), alpha, pad);
  return v.head(dim).squaredNorm();
}

SuccessReport success_check(const DensityOp &rho, const FockKet &target,
                            const SuccessThresholds &th) {
  SuccessReport rep;
  rep.trace = rho.trace();
  rep.fidelity = rep.trace > 0.0 ? fock::fidelity_pure(rho, target) / rep.trace : 0.0;
  if (rep.fidelity < th.min_fidelity) {
    rep.reason = "fidelity";
    return rep;
  }
  if (rep.trace < th.min_trace) {
    rep.reason = "trace";
    return rep;
  }
  const auto axis = fock::linspace(-th.window, th.window, th.points);
  rep.wigner_min = fock::min_negativity(fock::wigner(rho.scaled(1.0 / rep.trace), axis, axis));
  rep.wigner_checked = true;
  if (rep.wigner_min > th.max_wigner_min) {
    rep.reason = "wigner";
    return rep;
  }
  rep.success = true;
  return rep;
}

}  // namespace cvforge::loop

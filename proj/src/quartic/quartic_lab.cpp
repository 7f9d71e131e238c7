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

#include "quartic/quartic_lab.hpp"

#include <algorithm>
#include <cmath>

#include "common/parallel.hpp"
#include "fock/operators.hpp"
#include "fock/wigner.hpp"

namespace cvforge::quartic {

using fock::CMatrix;
using fock::CVector;

namespace {

constexpr double kDeltaBound = 1.0;
constexpr double kSqueezeBound = 2.0;
constexpr double kAlphaBound = 5.0;

double box_excess(double x, double bound) { return std::max(0.0, std::abs(x) - bound); }

// Normalized overlap <t|rho|t> / <t|t>; rho is assumed normalized.
double overlap(const DensityOp &rho, const CVector &t) {
  const double tn = t.squaredNorm();
  if (tn <= 0.0) return 0.0;
  return (t.adjoint() * rho.matrix() * t)(0, 0).real() / tn;
}

CVector quartic_ket(double delta, double s, int dim, int pad) {
  return fock::phase_poly(fock::squeezed_vacuum(s, dim, pad), delta, 4);
}

CVector displaced_squeezed_ket(Complex alpha, double s, int dim, int pad) {
  return fock::displace(fock::squeezed_vacuum(s, dim, pad), alpha, pad);
}

FitResult best_of(const Objective &objective, const std::vector<std::vector<double>> &starts,
                  const NelderMeadOptions &opts) {
  FitResult best;
  double best_f = std::numeric_limits<double>::infinity();
  for (const auto &x0 : starts) {
    const NelderMeadResult res = nelder_mead(objective, x0, opts);
    if (res.f < best_f) {
      best_f = res.f;
      best.params = res.x;
      best.iterations = res.iterations;
      best.converged = res.converged;
    }
  }
  best.fidelity = std::clamp(1.0 - best_f, 0.0, 1.0);
  return best;
}

DensityOp require_normalized(const DensityOp &state) {
  require(state.modes() == 1, ErrorCode::dimension_mismatch, "fits need a single-mode state");
  const double tr = state.trace();
  require(tr > 1e-12, ErrorCode::zero_probability, "cannot fit a state with zero trace");
  return state.scaled(1.0 / tr);
}

}  // namespace

void QuarticConfig::validate() const {
  require(dim >= 2, ErrorCode::invalid_dimension, "dimension must be at least 2");
  require(pad >= 0, ErrorCode::invalid_parameter, "pad must be non-negative");
  require(alpha_mag >= 0.0, ErrorCode::invalid_parameter, "alpha_mag must be non-negative");
  require(std::abs(r) <= fock::kMaxSqueeze, ErrorCode::truncation_risk, "squeezing too large");
  require(eta > 0.0 && eta <= 1.0, ErrorCode::invalid_parameter,
          "detector efficiency must lie in (0, 1]");
  require(n_max >= 0 && n_max < dim, ErrorCode::invalid_parameter,
          "n_max must lie below the truncation");
  require(wigner_points >= 2 && wigner_window > 0.0, ErrorCode::invalid_parameter,
          "Wigner grid needs at least two points and a positive window");
}

fock::AncillaReadout cluster_readout(const DensityOp &data, double ancilla_r, Complex alpha,
                                     const QuarticConfig &cfg) {
  require(data.modes() == 1 && data.dim() == cfg.dim, ErrorCode::dimension_mismatch,
          "data state does not match configured dimension");
  const CVector ancilla = fock::squeezed_vacuum(ancilla_r, cfg.dim, cfg.pad);
  const CMatrix detect = fock::gate_displacement(alpha, cfg.dim, cfg.pad).matrix;
  const CMatrix comps = fock::purify_columns(data.matrix());
  std::vector<CMatrix> branches;
  branches.reserve(comps.cols());
  for (Eigen::Index k = 0; k < comps.cols(); ++k) {
    CMatrix psi = comps.col(k) * ancilla.transpose();
    fock::cz_inplace(psi);
    fock::apply_on_mode1(psi, detect);
    branches.push_back(std::move(psi));
  }
  return fock::AncillaReadout(std::move(branches), cfg.eta);
}

RoundResult cluster_round(const DensityOp &data, double ancilla_r, Complex alpha, int n,
                          const QuarticConfig &cfg) {
  require(n >= 0 && n < cfg.dim, ErrorCode::invalid_parameter, "outcome outside truncation");
  const fock::AncillaReadout readout = cluster_readout(data, ancilla_r, alpha, cfg);
  const double p = readout.probs()(n);
  require(p >= 1e-12, ErrorCode::zero_probability,
          "outcome n=" + std::to_string(n) + " has vanishing probability");
  DensityOp next = readout.conditioned(n).scaled(1.0 / p);
  next.hermitize();
  return RoundResult{std::move(next), p};
}

DensityOp quartic_input(const QuarticConfig &cfg) {
  cfg.validate();
  return DensityOp::from_ket(FockKet(fock::squeezed_vacuum(cfg.signed_r(), cfg.dim, cfg.pad)));
}

OutcomeRecord run_quartic(const QuarticConfig &cfg, int n1, int n2) {
  const DensityOp input = quartic_input(cfg);
  const RoundResult first = cluster_round(input, cfg.signed_r(), cfg.alpha1(), n1, cfg);
  const RoundResult second = cluster_round(first.state, cfg.signed_r(), cfg.alpha2(), n2, cfg);
  OutcomeRecord rec;
  rec.n1 = n1;
  rec.n2 = n2;
  rec.joint_prob = first.prob * second.prob;
  rec.state = second.state;
  return rec;
}

void analyze_record(OutcomeRecord &rec, const QuarticConfig &cfg) {
  require(rec.state.size() > 0, ErrorCode::lifecycle, "record has no conditioned state");
  rec.quartic = fit_quartic(rec.state, cfg.pad);
  rec.baseline = fit_displaced_squeezed(rec.state, cfg.pad);
  const auto axis = fock::linspace(-cfg.wigner_window, cfg.wigner_window, cfg.wigner_points);
  rec.wigner_min = fock::min_negativity(fock::wigner(rec.state, axis, axis));
  rec.fitted = true;
}

std::vector<OutcomeRecord> scan_outcomes(const QuarticConfig &cfg) {
  const DensityOp input = quartic_input(cfg);
  const fock::AncillaReadout first = cluster_readout(input, cfg.signed_r(), cfg.alpha1(), cfg);
  const int count = cfg.n_max + 1;

  // One second-round readout per first outcome yields every n2 at once.
  std::vector<std::vector<OutcomeRecord>> per_n1(count);
  parallel_for(count, [&](std::size_t i) {
    const int n1 = static_cast<int>(i);
    const double p1 = first.probs()(n1);
    auto &out = per_n1[i];
    if (p1 < cfg.min_prob) {
      for (int n2 = 0; n2 < count; ++n2)
        if (!cfg.postselect_equal || n2 == n1) {
          OutcomeRecord rec;
          rec.n1 = n1;
          rec.n2 = n2;
          out.push_back(std::move(rec));
        }
      return;
    }
    const DensityOp mid = first.conditioned(n1).scaled(1.0 / p1);
    const fock::AncillaReadout second = cluster_readout(mid, cfg.signed_r(), cfg.alpha2(), cfg);
    for (int n2 = 0; n2 < count; ++n2) {
      if (cfg.postselect_equal && n2 != n1) continue;
      const double p2 = second.probs()(n2);
      OutcomeRecord rec;
      rec.n1 = n1;
      rec.n2 = n2;
      rec.joint_prob = p1 * p2;
      if (rec.joint_prob >= cfg.min_prob && p2 >= 1e-12) {
        rec.state = second.conditioned(n2).scaled(1.0 / p2);
        rec.state.hermitize();
      }
      out.push_back(std::move(rec));
    }
  });

  std::vector<OutcomeRecord> records;
  for (auto &v : per_n1)
    for (auto &rec : v) records.push_back(std::move(rec));
  std::stable_sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
    return a.joint_prob > b.joint_prob;
  });

  std::size_t fit_count = 0;
  for (const auto &rec : records)
    if (rec.state.size() > 0) ++fit_count;
  if (cfg.top_k >= 0) fit_count = std::min<std::size_t>(fit_count, cfg.top_k);
  parallel_for(fit_count, [&](std::size_t i) { analyze_record(records[i], cfg); });
  // Drop the conditioned states nobody asked to analyze.
  for (std::size_t i = fit_count; i < records.size(); ++i) records[i].state = DensityOp();
  return records;
}

FockKet target_quartic(double delta, double s, int dim, int pad) {
  require(dim >= 2, ErrorCode::invalid_dimension, "dimension must be at least 2");
  return FockKet(quartic_ket(delta, s, dim, pad)).normalized();
}

FitResult fit_quartic(const DensityOp &state, int pad) {
  const DensityOp rho = require_normalized(state);
  const int dim = rho.dim();
  const Objective objective = [&](const std::vector<double> &x) {
    const double excess = box_excess(x[0], kDeltaBound) + box_excess(x[1], kSqueezeBound);
    if (excess > 0.0) return 1.0 + excess;
    return 1.0 - overlap(rho, quartic_ket(x[0], x[1], dim, pad));
  };
  std::vector<std::vector<double>> starts;
  for (double d0 : {-0.05, 0.0, 0.05})
    for (double s0 : {-1.0, 0.0, 1.0}) starts.push_back({d0, s0});
  NelderMeadOptions opts;
  opts.init_step = {0.02, 0.2};
  return best_of(objective, starts, opts);
}

FitResult fit_displaced_squeezed(const DensityOp &state, int pad) {
  const DensityOp rho = require_normalized(state);
  const int dim = rho.dim();
  const Complex mean = (rho.matrix() * fock::ladder_matrix(dim)).trace();
  const Objective objective = [&](const std::vector<double> &x) {
    const double excess = box_excess(x[0], kAlphaBound) + box_excess(x[1], kAlphaBound) +
                          box_excess(x[2], kSqueezeBound);
    if (excess > 0.0) return 1.0 + excess;
    return 1.0 - overlap(rho, displaced_squeezed_ket(Complex(x[0], x[1]), x[2], dim, pad));
  };
  std::vector<std::vector<double>> starts;
  for (double scale : {0.5, 1.0, 1.5})
    for (double s0 : {-1.0, 0.0, 1.0}) starts.push_back({scale * mean.real(), scale * mean.imag(), s0});
  NelderMeadOptions opts;
  opts.init_step = {0.3, 0.3, 0.2};
  return best_of(objective, starts, opts);
}

}  // namespace cvforge::quartic

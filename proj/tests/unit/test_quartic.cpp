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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fock/kernels.hpp"
#include "fock/operators.hpp"
#include "quartic/nelder_mead.hpp"
#include "quartic/quartic_lab.hpp"

using namespace cvforge;
using namespace cvforge::quartic;
using fock::CMatrix;
using fock::CVector;

namespace {

double dist(const DensityOp &a, const DensityOp &b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

QuarticConfig small_config() {
  QuarticConfig cfg;
  cfg.dim = 24;
  cfg.r = 0.6;
  cfg.alpha_mag = 1.5;
  cfg.n_max = 12;
  cfg.top_k = 2;
  cfg.wigner_points = 21;
  return cfg;
}

// Dense two-mode reference for one cluster round, before conditioning.
DensityOp dense_round(const DensityOp &data, double ancilla_r, Complex alpha, const QuarticConfig &cfg) {
  const CVector anc = fock::gate_squeeze(ancilla_r, cfg.dim, cfg.pad).matrix.col(0);
  DensityOp joint = fock::tensor(data, DensityOp::from_ket(FockKet(anc)));
  joint = fock::conjugate(fock::gate_cz(cfg.dim), joint);
  return fock::conjugate(fock::on_mode(fock::gate_displacement(alpha, cfg.dim, cfg.pad), 1), joint);
}

}  // namespace

TEST_CASE("Nelder-Mead benchmarks") {
  const auto quad = nelder_mead([](const std::vector<double> &x) { return (x[0] - 3) * (x[0] - 3); }, {0.0});
  CHECK(std::abs(quad.x[0] - 3.0) <= 1e-6);
  CHECK(quad.converged);

  const auto rosen = nelder_mead(
      [](const std::vector<double> &x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
      },
      {-1.2, 1.0});
  CHECK(rosen.f <= 1e-6);

  // A flat objective never shrinks below x_tol within the iteration budget.
  NelderMeadOptions tight;
  tight.x_tol = 1e-300;
  tight.max_iter = 50;
  const auto flat = nelder_mead([](const std::vector<double> &) { return 1.0; }, {0.5, 0.5}, tight);
  CHECK_FALSE(flat.converged);
  CHECK(flat.f == 1.0);

  CHECK_THROWS_AS(nelder_mead([](const std::vector<double> &) { return NAN; }, {0.0}), Error);
}

TEST_CASE("cluster round against dense contraction") {
  QuarticConfig cfg = small_config();
  cfg.dim = 14;
  const DensityOp vac = DensityOp::from_ket(FockKet::vacuum(cfg.dim));
  // r = 0 ancilla, alpha picked to make n = 2 the most likely count.
  const Complex alpha(0.0, std::sqrt(2.0));
  const fock::AncillaReadout readout = cluster_readout(vac, 0.0, alpha, cfg);
  Eigen::Index best = 0;
  readout.probs().maxCoeff(&best);
  const int n = static_cast<int>(best);
  const RoundResult res = cluster_round(vac, 0.0, alpha, n, cfg);
  const DensityOp joint = dense_round(vac, 0.0, alpha, cfg);
  const fock::Conditioned c = fock::pnr_condition(joint, 1, n, 1.0);
  CHECK(res.prob == doctest::Approx(c.prob).epsilon(1e-10));
  CHECK(dist(res.state, c.state.scaled(1.0 / c.prob)) <= 1e-10);

  // Mixed data, lossy detector: completeness and mixture consistency.
  cfg.eta = 0.9;
  CMatrix m = CMatrix::Zero(cfg.dim, cfg.dim);
  m(0, 0) = 0.6;
  m(1, 1) = 0.3;
  m(2, 2) = 0.1;
  m(0, 2) = m(2, 0) = 0.05;
  const DensityOp data(cfg.dim, 1, m);
  const fock::AncillaReadout lossy = cluster_readout(data, -0.4, Complex(1.0, 0.5), cfg);
  const DensityOp dense = dense_round(data, -0.4, Complex(1.0, 0.5), cfg);
  CHECK(std::abs(lossy.total() - dense.trace()) <= 1e-8);
  CMatrix mix = CMatrix::Zero(cfg.dim, cfg.dim);
  for (int k = 0; k < cfg.dim; ++k) {
    if (lossy.probs()(k) < 1e-12) continue;
    const RoundResult rk = cluster_round(data, -0.4, Complex(1.0, 0.5), k, cfg);
    mix += rk.prob * rk.state.matrix();
  }
  CHECK((mix - fock::partial_trace(dense, 0).matrix()).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK_THROWS_AS(cluster_round(data, 0.0, 0.0, cfg.dim, cfg), Error);
}

TEST_CASE("rounds commute for real displacements") {
  QuarticConfig cfg = small_config();
  const DensityOp input = quartic_input(cfg);
  const double ra = cfg.signed_r();
  const RoundResult a1 = cluster_round(input, ra, 1.2, 3, cfg);
  const RoundResult a2 = cluster_round(a1.state, ra, -0.8, 5, cfg);
  const RoundResult b1 = cluster_round(input, ra, -0.8, 5, cfg);
  const RoundResult b2 = cluster_round(b1.state, ra, 1.2, 3, cfg);
  CHECK(dist(a2.state, b2.state) <= 1e-8);
  CHECK(a1.prob * a2.prob == doctest::Approx(b1.prob * b2.prob).epsilon(1e-8));
}

TEST_CASE("run_quartic composes two rounds") {
  const QuarticConfig cfg = small_config();
  const OutcomeRecord rec = run_quartic(cfg, 2, 4);
  const RoundResult r1 = cluster_round(quartic_input(cfg), cfg.signed_r(), cfg.alpha1(), 2, cfg);
  const RoundResult r2 = cluster_round(r1.state, cfg.signed_r(), cfg.alpha2(), 4, cfg);
  CHECK(rec.joint_prob == doctest::Approx(r1.prob * r2.prob).epsilon(1e-12));
  CHECK(dist(rec.state, r2.state) == 0.0);
  CHECK(rec.state.trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quartic targets") {
  const FockKet plain = target_quartic(0.0, 0.7, 30);
  CHECK((plain.amplitudes - fock::squeezed_vacuum(0.7, 30).normalized()).norm() <= 1e-12);
  for (double d : {-0.3, 0.02, 0.4})
    for (double s : {-1.2, 0.0, 0.9}) CHECK(std::abs(target_quartic(d, s, 40).norm() - 1.0) <= 1e-9);
  const FockKet t = target_quartic(0.1, 0.5, 60);
  double odd = 0.0;
  for (int n = 1; n < 60; n += 2) odd = std::max(odd, std::abs(t.amplitudes(n)));
  CHECK(odd <= 1e-12);
}

TEST_CASE("fits recover their own model") {
  const FitResult self = fit_quartic(DensityOp::from_ket(target_quartic(0.08, 0.6, 60)));
  CHECK(std::abs(self.params[0] - 0.08) <= 0.005);
  CHECK(std::abs(self.params[1] - 0.6) <= 0.01);
  CHECK(self.fidelity >= 0.999);

  const FitResult flat = fit_quartic(DensityOp::from_ket(FockKet(fock::squeezed_vacuum(-0.8, 60).normalized())));
  CHECK(std::abs(flat.params[0]) <= 0.005);
  CHECK(flat.fidelity >= 0.999);

  // Global phases do not matter. The density matrices differ only by rounding, which
  // the simplex may amplify up to its own tolerance.
  const CVector v = target_quartic(0.05, -0.4, 40).amplitudes;
  const FitResult a = fit_quartic(DensityOp::from_ket(FockKet(v)));
  const FitResult b = fit_quartic(DensityOp::from_ket(FockKet(std::polar(1.0, 1.1) * v)));
  CHECK(std::abs(a.params[0] - b.params[0]) <= 1e-6);
  CHECK(std::abs(a.params[1] - b.params[1]) <= 1e-6);
  CHECK(std::abs(a.fidelity - b.fidelity) <= 1e-10);

  const CVector dsq = fock::displace(fock::squeezed_vacuum(0.5, 40), Complex(0.8, -1.1)).normalized();
  const FitResult base = fit_displaced_squeezed(DensityOp::from_ket(FockKet(dsq)));
  CHECK(base.fidelity >= 0.999);
  CHECK(base.params[0] == doctest::Approx(0.8).epsilon(1e-3));
  CHECK(base.params[1] == doctest::Approx(-1.1).epsilon(1e-3));
  CHECK(base.params[2] == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("outcome scans") {
  QuarticConfig cfg = small_config();
  const auto equal = scan_outcomes(cfg);
  REQUIRE(equal.size() == static_cast<std::size_t>(cfg.n_max + 1));
  for (std::size_t i = 0; i < equal.size(); ++i) {
    CHECK(equal[i].n1 == equal[i].n2);
    if (i) CHECK(equal[i - 1].joint_prob >= equal[i].joint_prob);
    CHECK(equal[i].fitted == (i < 2));
  }
  const OutcomeRecord direct = run_quartic(cfg, equal[0].n1, equal[0].n2);
  CHECK(direct.joint_prob == doctest::Approx(equal[0].joint_prob).epsilon(1e-10));
  CHECK(dist(direct.state, equal[0].state) <= 1e-10);

  const auto again = scan_outcomes(cfg);
  for (std::size_t i = 0; i < equal.size(); ++i) {
    CHECK(again[i].joint_prob == equal[i].joint_prob);
    CHECK(again[i].quartic.params == equal[i].quartic.params);
    CHECK(again[i].wigner_min == equal[i].wigner_min);
  }

  cfg.postselect_equal = false;
  cfg.top_k = 0;
  const auto full = scan_outcomes(cfg);
  CHECK(full.size() == static_cast<std::size_t>((cfg.n_max + 1) * (cfg.n_max + 1)));
  double total = 0.0;
  for (const auto &r : full) total += r.joint_prob;
  CHECK(total <= 1.0 + 1e-6);
  CHECK(total > 0.5);
}

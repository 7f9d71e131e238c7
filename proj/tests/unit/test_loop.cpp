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

#include "doctest.h"
#include "fock/kernels.hpp"
#include "fock/operators.hpp"
#include "fock/wigner.hpp"
#include "loop/loop_circuit.hpp"

using namespace cvforge;
using namespace cvforge::loop;
using fock::CMatrix;
using fock::CVector;

namespace {

double dist(const DensityOp &a, const DensityOp &b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

// A mixed, off-centre loop state to exercise the loop with.
DensityOp scrambled(int dim) {
  CMatrix m(dim, 3);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < 3; ++k)
      m(i, k) = Complex(std::cos(0.7 * i + k), std::sin(0.3 * i * k + 1.0)) * std::exp(-0.25 * i);
  CMatrix rho = m * m.adjoint();
  rho /= rho.trace().real();
  return DensityOp(dim, 1, rho);
}

// Two-mode dense reference for one loop iteration.
DensityOp dense_two_mode(const DensityOp &rho, const Action &a, const LoopConfig &cfg) {
  const Complex alpha = cfg.displacement_axis == DisplacementAxis::imaginary
                            ? Complex(0.0, a.alpha)
                            : Complex(a.alpha, 0.0);
  const DensityOp moved = fock::conjugate(fock::gate_displacement(alpha, cfg.dim, cfg.pad), rho);
  const CVector anc = fock::gate_squeeze(a.r, cfg.dim, cfg.pad).matrix.col(0);
  DensityOp joint = fock::tensor(moved, DensityOp::from_ket(FockKet(anc)));
  joint = fock::conjugate(fock::gate_beamsplitter(a.tau, cfg.dim), joint);
  return fock::conjugate(fock::on_mode(fock::gate_displacement(cfg.beta, cfg.dim, cfg.pad), 1), joint);
}

}  // namespace

TEST_CASE("initial state") {
  LoopConfig cfg;
  cfg.r0 = 0.0;
  CHECK(dist(initial_state(cfg), DensityOp::from_ket(FockKet::vacuum(cfg.dim))) == 0.0);

  cfg.r0 = 1.15;
  const DensityOp rho0 = initial_state(cfg);
  CHECK(rho0.trace() >= 0.999);
  const double mean = fock::expectation(rho0, fock::number_operator(cfg.dim).matrix);
  // Untruncated photon number is out of reach at 31 levels; the truncated sum is the oracle.
  double oracle = 0.0;
  const double t = std::tanh(1.15);
  for (int k = 0; 2 * k < cfg.dim; ++k)
    oracle += 2 * k * std::exp(2 * k * std::log(t) + std::lgamma(2 * k + 1.0) -
                               2 * (k * std::log(2.0) + std::lgamma(k + 1.0))) /
              std::cosh(1.15);
  CHECK(std::abs(mean - oracle) <= 1e-4);

  LoopConfig wide = cfg;
  wide.dim = 80;
  const double wide_mean =
      fock::expectation(initial_state(wide), fock::number_operator(80).matrix);
  CHECK(std::abs(wide_mean - std::pow(std::sinh(1.15), 2)) <= 1e-3);
}

TEST_CASE("tau = 0 freezes the loop") {
  LoopConfig cfg;
  cfg.dim = 16;
  const DensityOp rho = scrambled(cfg.dim);
  CounterStream rng(7);
  for (double eta : {1.0, 0.9})
    for (double r : {-1.15, 0.0, 0.6})
      for (Complex beta : {Complex(0, 2.5), Complex(1.0, -0.3)}) {
        cfg.eta = eta;
        cfg.beta = beta;
        const StepResult sampled = loop_step(rho, {0.0, r, 0.0}, cfg, &rng);
        CHECK(dist(sampled.state, rho) <= 1e-9);
        for (int n : {0, 3}) {
          const auto readout = loop_readout(rho, {0.0, r, 0.0}, cfg);
          if (readout.probs()(n) < 1e-12) continue;
          CHECK(dist(loop_step(rho, {0.0, r, 0.0}, cfg, nullptr, n).state, rho) <= 1e-9);
        }
      }
}

TEST_CASE("tau = 1 resets to the initial state") {
  LoopConfig cfg;
  const DensityOp rho0 = initial_state(cfg);
  const DensityOp expected = rho0.scaled(1.0 / rho0.trace());
  CounterStream rng(11);
  for (const DensityOp &start : {scrambled(cfg.dim), expected}) {
    const StepResult res = loop_step(start, {1.0, cfg.r0, 0.0}, cfg, &rng);
    CHECK(dist(res.state, expected) <= 1e-9);
  }
  cfg.eta = 0.99;
  const StepResult res = loop_step(scrambled(cfg.dim), {1.0, cfg.r0, 1.0}, cfg, &rng);
  CHECK(dist(res.state, expected) <= 1e-9);
}

TEST_CASE("loop step agrees with the dense two-mode route") {
  LoopConfig cfg;
  cfg.dim = 12;
  cfg.pad = 20;
  const DensityOp rho = scrambled(cfg.dim);
  for (const auto axis : {DisplacementAxis::imaginary, DisplacementAxis::real})
    for (double eta : {1.0, 0.95}) {
      cfg.displacement_axis = axis;
      cfg.eta = eta;
      const Action a{0.4, -0.5, 0.8};
      const DensityOp joint = dense_two_mode(rho, a, cfg);
      const fock::RVector p = fock::pnr_outcome_probs(joint, 1, eta);
      const auto readout = loop_readout(rho, a, cfg);
      CHECK((readout.probs() - p).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(std::abs(readout.total() - joint.trace()) <= 1e-10);

      CMatrix mix = CMatrix::Zero(cfg.dim, cfg.dim);
      for (int n = 0; n < cfg.dim; ++n) {
        if (p(n) < 1e-12) continue;
        const StepResult res = loop_step(rho, a, cfg, nullptr, n);
        const fock::Conditioned c = fock::pnr_condition(joint, 1, n, eta);
        CHECK(dist(res.state, c.state.scaled(1.0 / c.prob)) <= 1e-9);
        CHECK(res.record.outcome_prob == doctest::Approx(c.prob).epsilon(1e-9));
        mix += res.record.outcome_prob * res.state.matrix();
      }
      CHECK((mix - fock::partial_trace(joint, 0).matrix()).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("outcome distribution at the working dimension") {
  const LoopConfig cfg;
  const DensityOp rho0 = initial_state(cfg);
  const Action a{0.5, 1.15, 0.0};
  const auto readout = loop_readout(rho0, a, cfg);
  // Mass of the two-mode state: every branch norm squared.
  const DensityOp reduced = readout.reduced();
  CHECK(std::abs(readout.total() - reduced.trace()) <= 1e-10);
  CMatrix sum = CMatrix::Zero(cfg.dim, cfg.dim);
  for (int n = 0; n < cfg.dim; ++n) sum += readout.conditioned(n).matrix();
  CHECK((sum - reduced.matrix()).cwiseAbs().maxCoeff() <= 1e-10);

  // Small parameters keep everything inside the truncation.
  LoopConfig tame;
  tame.r0 = 0.3;
  tame.beta = Complex(0.0, 0.5);
  const auto small = loop_readout(initial_state(tame).scaled(1.0 / initial_state(tame).trace()),
                                  {0.3, 0.2, 0.1}, tame);
  CHECK(std::abs(small.total() - 1.0) <= 1e-6);
}

TEST_CASE("determinism and errors") {
  const LoopConfig cfg;
  const DensityOp rho0 = initial_state(cfg);
  const Action a{0.5, 0.7, -1.0};
  const StepResult x = loop_step(rho0, a, cfg, nullptr, 4);
  const StepResult y = loop_step(rho0, a, cfg, nullptr, 4);
  CHECK(x.state.matrix() == y.state.matrix());
  CHECK(x.record.outcome_prob == y.record.outcome_prob);

  CounterStream r1(99), r2(99);
  DensityOp s1 = rho0, s2 = rho0;
  for (int j = 0; j < 5; ++j) {
    const StepResult u = loop_step(s1, a, cfg, &r1);
    const StepResult v = loop_step(s2, a, cfg, &r2);
    CHECK(u.record.outcome_n == v.record.outcome_n);
    CHECK(u.state.matrix() == v.state.matrix());
    s1 = u.state;
    s2 = v.state;
  }

  // The ancilla with r = 0 on a vacuum loop cannot produce odd photons through tau = 0.
  LoopConfig quiet = cfg;
  quiet.beta = 0.0;
  quiet.r0 = 0.0;
  CHECK_THROWS_AS(loop_step(initial_state(quiet), {0.0, 0.0, 0.0}, quiet, nullptr, 1), Error);
  CHECK_THROWS_AS(loop_step(rho0, {1.5, 0.0, 0.0}, cfg, nullptr, 0), Error);
  CHECK_THROWS_AS(loop_step(rho0, {0.5, 2.0, 0.0}, cfg, nullptr, 0), Error);
  CHECK_THROWS_AS(loop_step(rho0, {0.5, 0.0, 3.0}, cfg, nullptr, 0), Error);
  CHECK_THROWS_AS(loop_step(rho0, a, cfg, nullptr), Error);
}

TEST_CASE("cubic target") {
  const FockKet plain = target_cubic(0.0, -0.7, Complex(0, 1.25), 31);
  const CVector dsq = fock::displace(fock::squeezed_vacuum(-0.7, 31), Complex(0, 1.25)).normalized();
  CHECK((plain.amplitudes - dsq).norm() <= 1e-12);

  const FockKet t = target_cubic(-0.2, -0.7, Complex(0, 1.25), 31);
  CHECK(t.is_normalized());
  CHECK(target_cubic_occupation(-0.2, -0.7, Complex(0, 1.25), 31) > 0.99);
  const auto axis = fock::linspace(-5, 5, 61);
  CHECK(fock::min_negativity(fock::wigner(DensityOp::from_ket(t), axis, axis)) < 0.0);
}

TEST_CASE("success classification") {
  const FockKet t = target_cubic(-0.2, -0.7, Complex(0, 1.25), 31);
  const DensityOp rho = DensityOp::from_ket(t);
  const SuccessReport ok = success_check(rho, t);
  CHECK(ok.success);
  CHECK(ok.wigner_min <= -0.01);

  const SuccessReport vac = success_check(DensityOp::from_ket(FockKet::vacuum(31)), t);
  CHECK_FALSE(vac.success);

  SuccessThresholds loose;
  loose.min_fidelity = 0.0;
  const SuccessReport positive = success_check(DensityOp::from_ket(FockKet::vacuum(31)), t, loose);
  CHECK_FALSE(positive.success);
  CHECK(positive.reason == "wigner");

  const SuccessReport faded = success_check(rho.scaled(0.97), t);
  CHECK_FALSE(faded.success);
  CHECK(faded.reason == "trace");
}

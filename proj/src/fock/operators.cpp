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

#include "fock/operators.hpp"

#include <cmath>
#include <string>

#include "fock/spectral.hpp"

namespace cvforge::fock {
namespace {

void check_dim(int dim) {
  require(dim >= 2, ErrorCode::invalid_dimension,
          "dimension must be at least 2, got " + std::to_string(dim));
}

void check_pad(int pad) {
  require(pad >= 0, ErrorCode::invalid_parameter, "pad must be non-negative");
}

CVector phases(int n, double angle) {
  CVector out(n);
  for (int k = 0; k < n; ++k) out(k) = std::polar(1.0, angle * k);
  return out;
}

}  // namespace

CMatrix ladder_matrix(int dim) {
  CMatrix a = CMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

std::pair<GateMatrix, GateMatrix> ladder_ops(int dim) {
  check_dim(dim);
  CMatrix a = ladder_matrix(dim);
  CMatrix ad = a.adjoint();
  return {GateMatrix{dim, 1, std::move(a), false}, GateMatrix{dim, 1, std::move(ad), false}};
}

GateMatrix quadrature_q(int dim) {
  check_dim(dim);
  const CMatrix a = ladder_matrix(dim);
  return GateMatrix{dim, 1, (a + a.adjoint()) / std::sqrt(2.0), false};
}

GateMatrix quadrature_p(int dim) {
  check_dim(dim);
  const CMatrix a = ladder_matrix(dim);
  return GateMatrix{dim, 1, Complex(0.0, 1.0) * (a.adjoint() - a) / std::sqrt(2.0), false};
}

GateMatrix number_operator(int dim) {
  check_dim(dim);
  CMatrix n = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = k;
  return GateMatrix{dim, 1, std::move(n), false};
}

GateMatrix gate_displacement(Complex alpha, int dim, int pad) {
  check_dim(dim);
  check_pad(pad);
  const int size = dim + pad;
  // D(|alpha| e^{i phi}) = R(phi) exp(-i sqrt(2) |alpha| P) R(-phi), R(phi) = e^{i phi n}.
  const Spectrum &spec = spectrum(Generator::momentum, size);
  const CMatrix top = spec.vectors.topRows(dim);
  const CVector ph =
      (spec.values * (-std::sqrt(2.0) * std::abs(alpha))).unaryExpr([](double x) {
        return std::polar(1.0, x);
      });
  CMatrix d = top * ph.asDiagonal() * top.adjoint();
  const CVector rot = phases(dim, std::arg(alpha));
  d = rot.asDiagonal() * d * rot.conjugate().asDiagonal();
  return GateMatrix{dim, 1, std::move(d), pad == 0};
}

GateMatrix gate_squeeze(double r, int dim, int pad) {
  check_dim(dim);
  check_pad(pad);
  require(std::abs(r) <= kMaxSqueeze, ErrorCode::truncation_risk,
          "squeezing |r| = " + std::to_string(std::abs(r)) + " exceeds " +
              std::to_string(kMaxSqueeze));
  const Spectrum &spec = spectrum(Generator::squeeze, dim + pad);
  const CMatrix top = spec.vectors.topRows(dim);
  const CVector ph = (spec.values * (-r)).unaryExpr([](double x) { return std::polar(1.0, x); });
  return GateMatrix{dim, 1, top * ph.asDiagonal() * top.adjoint(), pad == 0};
}

GateMatrix gate_beamsplitter(double tau, int dim) {
  check_dim(dim);
  require(tau >= 0.0 && tau <= 1.0, ErrorCode::invalid_parameter,
          "transmittivity must lie in [0, 1]");
  const double theta = std::asin(std::sqrt(tau));
  const BeamsplitterSpectrum &bs = beamsplitter_spectrum(dim);
  CMatrix u = CMatrix::Zero(dim * dim, dim * dim);
  for (const PhotonBlock &block : bs.blocks) {
    const CMatrix b = block.spec.evolve(theta);
    for (int ic : block.first_mode) {
      const int col = ic * dim + (block.total - ic);
      for (int ir : block.first_mode) u(ir * dim + (block.total - ir), col) = b(ir, ic);
    }
  }
  // Blocks with total >= dim are cropped; only the endpoints stay permutations.
  return GateMatrix{dim, 2, std::move(u), tau == 0.0 || tau == 1.0};
}

GateMatrix gate_cz(int dim) {
  check_dim(dim);
  const Spectrum &q = spectrum(Generator::position, dim);
  const CMatrix v2 = tensor(q.vectors, q.vectors);
  CVector ph(dim * dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) ph(j * dim + k) = std::polar(1.0, q.values(j) * q.values(k));
  return GateMatrix{dim, 2, v2 * ph.asDiagonal() * v2.adjoint(), true};
}

GateMatrix gate_phase_poly(double coeff, int power, int dim) {
  check_dim(dim);
  require(power == 3 || power == 4, ErrorCode::invalid_parameter,
          "phase polynomial power must be 3 or 4");
  const Spectrum &q = spectrum(Generator::position, dim);
  const CVector ph = q.values.unaryExpr([&](double x) {
    return std::polar(1.0, coeff * std::pow(x, power));
  });
  return GateMatrix{dim, 1, q.vectors * ph.asDiagonal() * q.vectors.adjoint(), true};
}

GateMatrix on_mode(const GateMatrix &gate, int mode) {
  require(gate.modes == 1, ErrorCode::dimension_mismatch, "on_mode expects a single-mode gate");
  require(mode == 0 || mode == 1, ErrorCode::invalid_parameter, "mode index must be 0 or 1");
  const CMatrix id = CMatrix::Identity(gate.dim, gate.dim);
  CMatrix m = mode == 0 ? tensor(gate.matrix, id) : tensor(id, gate.matrix);
  return GateMatrix{gate.dim, 2, std::move(m), gate.unitary};
}

CMatrix tensor(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityOp tensor(const DensityOp &a, const DensityOp &b) {
  require(a.modes() == 1 && b.modes() == 1, ErrorCode::dimension_mismatch,
          "tensor expects single-mode operands");
  require(a.dim() == b.dim(), ErrorCode::dimension_mismatch,
          "tensor operands must share a truncation");
  return DensityOp(a.dim(), 2, tensor(a.matrix(), b.matrix()));
}

DensityOp partial_trace(const DensityOp &rho, int keep) {
  require(rho.modes() == 2, ErrorCode::dimension_mismatch, "partial_trace expects two modes");
  require(keep == 0 || keep == 1, ErrorCode::invalid_parameter, "mode index must be 0 or 1");
  const int d = rho.dim();
  const CMatrix &m = rho.matrix();
  CMatrix out = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k)
        s += keep == 0 ? m(i * d + k, j * d + k) : m(k * d + i, k * d + j);
      out(i, j) = s;
    }
  return DensityOp(d, 1, std::move(out));
}

FockKet apply(const GateMatrix &gate, const FockKet &ket) {
  require(gate.modes == 1 && gate.dim == ket.dim(), ErrorCode::dimension_mismatch,
          "gate and ket dimensions differ");
  return FockKet(gate.matrix * ket.amplitudes);
}

DensityOp conjugate(const GateMatrix &gate, const DensityOp &rho) {
  require(gate.modes == rho.modes() && gate.dim == rho.dim(), ErrorCode::dimension_mismatch,
          "gate and state dimensions differ");
  DensityOp out(rho.dim(), rho.modes(), gate.matrix * rho.matrix() * gate.matrix.adjoint());
  out.hermitize();
  return out;
}

RMatrix pnr_weights(int dim, double eta) {
  require(eta > 0.0 && eta <= 1.0, ErrorCode::invalid_parameter,
          "detector efficiency must lie in (0, 1]");
  RMatrix w = RMatrix::Zero(dim, dim);  // w(m, n)
  if (eta == 1.0) {
    w.setIdentity();
    return w;
  }
  const double log_eta = std::log(eta);
  const double log_loss = std::log1p(-eta);
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n <= m; ++n) {
      const double log_binom = std::lgamma(m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0);
      w(m, n) = std::exp(log_binom + n * log_eta + (m - n) * log_loss);
    }
  return w;
}

RVector pnr_outcome_probs(const DensityOp &rho, int measured, double eta) {
  const RMatrix w = pnr_weights(rho.dim(), eta);
  const RVector raw = partial_trace(rho, measured).matrix().diagonal().real();
  return w.transpose() * raw;
}

Conditioned pnr_condition(const DensityOp &rho, int measured, int n, double eta) {
  require(rho.modes() == 2, ErrorCode::dimension_mismatch, "pnr_condition expects two modes");
  require(measured == 0 || measured == 1, ErrorCode::invalid_parameter,
          "mode index must be 0 or 1");
  const int d = rho.dim();
  require(n >= 0 && n < d, ErrorCode::invalid_parameter, "outcome outside truncation");
  const RMatrix w = pnr_weights(d, eta);
  const CMatrix &m = rho.matrix();
  CMatrix out = CMatrix::Zero(d, d);
  for (int k = n; k < d; ++k) {
    const double wk = w(k, n);
    if (wk == 0.0) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out(i, j) += wk * (measured == 1 ? m(i * d + k, j * d + k) : m(k * d + i, k * d + j));
  }
  DensityOp state(d, 1, std::move(out));
  state.hermitize();
  const double prob = state.trace();
  require(prob >= 1e-12, ErrorCode::zero_probability,
          "outcome n=" + std::to_string(n) + " has vanishing probability");
  return Conditioned{std::move(state), prob};
}

double fidelity_pure(const DensityOp &rho, const FockKet &target) {
  require(rho.modes() == 1 && rho.dim() == target.dim(), ErrorCode::dimension_mismatch,
          "fidelity operands have different dimensions");
  return target.amplitudes.dot(rho.matrix() * target.amplitudes).real();
}

double trace(const DensityOp &rho) { return rho.trace(); }

RVector photon_distribution(const DensityOp &rho) {
  require(rho.modes() == 1, ErrorCode::dimension_mismatch,
          "photon distribution needs a single-mode state");
  return rho.matrix().diagonal().real();
}

RVector photon_distribution(const FockKet &ket) { return ket.amplitudes.cwiseAbs2(); }

double expectation(const DensityOp &rho, const CMatrix &op) {
  require(op.rows() == rho.size() && op.cols() == rho.size(), ErrorCode::dimension_mismatch,
          "operator and state dimensions differ");
  return (rho.matrix() * op).trace().real();
}

double unitarity_error(const CMatrix &u) {
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace cvforge::fock

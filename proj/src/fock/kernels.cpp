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

#include "fock/kernels.hpp"

#include <cmath>

#include "fock/operators.hpp"
#include "fock/spectral.hpp"

namespace cvforge::fock {
namespace {

CVector rotation(int n, double angle) {
  CVector out(n);
  for (int k = 0; k < n; ++k) out(k) = std::polar(1.0, angle * k);
  return out;
}

CVector phase_vector(const RVector &values, double t) {
  return (values * (-t)).unaryExpr([](double x) { return std::polar(1.0, x); });
}

// Cropped exp(-i t H) applied to v, H diagonalized at size dim + pad.
CVector cropped_evolve(const Spectrum &spec, const CVector &v, double t) {
  const Eigen::Index d = v.size();
  const auto top = spec.vectors.topRows(d);
  CVector y = top.adjoint() * v;
  y.array() *= phase_vector(spec.values, t).array();
  return top * y;
}

}  // namespace

CVector displace(const CVector &v, Complex alpha, int pad) {
  const int d = static_cast<int>(v.size());
  require(d >= 2, ErrorCode::invalid_dimension, "ket dimension must be at least 2");
  require(pad >= 0, ErrorCode::invalid_parameter, "pad must be non-negative");
  if (alpha == Complex(0.0, 0.0)) return v;
  const CVector rot = rotation(d, std::arg(alpha));
  const CVector w = rot.conjugate().cwiseProduct(v);
  const Spectrum &spec = spectrum(Generator::momentum, d + pad);
  return rot.cwiseProduct(cropped_evolve(spec, w, std::sqrt(2.0) * std::abs(alpha)));
}

CVector squeeze(const CVector &v, double r, int pad) {
  const int d = static_cast<int>(v.size());
  require(d >= 2, ErrorCode::invalid_dimension, "ket dimension must be at least 2");
  require(std::abs(r) <= kMaxSqueeze, ErrorCode::truncation_risk, "squeezing magnitude too large");
  if (r == 0.0) return v;
  return cropped_evolve(spectrum(Generator::squeeze, d + pad), v, r);
}

CVector squeezed_vacuum(double r, int dim, int pad) {
  return squeeze(FockKet::vacuum(dim).amplitudes, r, pad);
}

CVector phase_poly(const CVector &v, double coeff, int power) {
  const int d = static_cast<int>(v.size());
  require(power == 3 || power == 4, ErrorCode::invalid_parameter,
          "phase polynomial power must be 3 or 4");
  const Spectrum &q = spectrum(Generator::position, d);
  CVector y = q.vectors.adjoint() * v;
  for (int k = 0; k < d; ++k) y(k) *= std::polar(1.0, coeff * std::pow(q.values(k), power));
  return q.vectors * y;
}

void beamsplitter_inplace(CMatrix &psi, double tau) {
  const int d = static_cast<int>(psi.rows());
  require(psi.cols() == d, ErrorCode::dimension_mismatch, "two-mode amplitudes must be square");
  require(tau >= 0.0 && tau <= 1.0, ErrorCode::invalid_parameter,
          "transmittivity must lie in [0, 1]");
  if (tau == 0.0) return;
  const double theta = std::asin(std::sqrt(tau));
  const BeamsplitterSpectrum &bs = beamsplitter_spectrum(d);
  CVector x, y;
  for (const PhotonBlock &block : bs.blocks) {
    x = CVector::Zero(block.total + 1);
    for (int i : block.first_mode) x(i) = psi(i, block.total - i);
    y = block.spec.vectors.adjoint() * x;
    y.array() *= phase_vector(block.spec.values, theta).array();
    x = block.spec.vectors * y;
    for (int i : block.first_mode) psi(i, block.total - i) = x(i);
  }
}

void cz_inplace(CMatrix &psi) {
  const int d = static_cast<int>(psi.rows());
  require(psi.cols() == d, ErrorCode::dimension_mismatch, "two-mode amplitudes must be square");
  const Spectrum &q = spectrum(Generator::position, d);
  const CMatrix &v = q.vectors;
  CMatrix x = v.adjoint() * psi * v.conjugate();
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) x(j, k) *= std::polar(1.0, q.values(j) * q.values(k));
  psi.noalias() = v * x * v.transpose();
}

void apply_on_mode1(CMatrix &psi, const CMatrix &gate) {
  require(gate.rows() == psi.cols() && gate.cols() == psi.cols(), ErrorCode::dimension_mismatch,
          "gate does not match mode dimension");
  CMatrix out = psi * gate.transpose();
  psi = std::move(out);
}

CVector flatten(const CMatrix &psi) {
  const Eigen::Index d = psi.rows();
  CVector v(d * psi.cols());
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < psi.cols(); ++j) v(i * psi.cols() + j) = psi(i, j);
  return v;
}

CMatrix unflatten(const CVector &v, int dim) {
  require(v.size() == static_cast<Eigen::Index>(dim) * dim, ErrorCode::dimension_mismatch,
          "two-mode vector has wrong length");
  CMatrix psi(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) psi(i, j) = v(i * dim + j);
  return psi;
}

CMatrix purify_columns(const CMatrix &rho, double rel_cutoff) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho);
  require(solver.info() == Eigen::Success, ErrorCode::numeric, "eigendecomposition failed");
  const RVector &lambda = solver.eigenvalues();
  const double top = lambda.maxCoeff();
  require(top > 0.0, ErrorCode::numeric, "density matrix has no positive weight");
  int kept = 0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k)
    if (lambda(k) > rel_cutoff * top) ++kept;
  CMatrix cols(rho.rows(), kept);
  int c = 0;
  // Eigenvalues ascend; store largest first.
  for (Eigen::Index k = lambda.size() - 1; k >= 0; --k)
    if (lambda(k) > rel_cutoff * top) cols.col(c++) = std::sqrt(lambda(k)) * solver.eigenvectors().col(k);
  return cols;
}

AncillaReadout::AncillaReadout(std::vector<CMatrix> branches, double eta)
    : branches_(std::move(branches)) {
  require(!branches_.empty(), ErrorCode::invalid_parameter, "readout needs at least one branch");
  dim_ = static_cast<int>(branches_.front().rows());
  weights_ = pnr_weights(dim_, eta);
  RVector raw = RVector::Zero(dim_);
  for (const CMatrix &b : branches_) raw += b.colwise().squaredNorm().transpose();
  probs_ = weights_.transpose() * raw;
}

DensityOp AncillaReadout::conditioned(int n) const {
  require(n >= 0 && n < dim_, ErrorCode::invalid_parameter, "outcome outside truncation");
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (const CMatrix &b : branches_)
    for (int m = n; m < dim_; ++m) {
      const double w = weights_(m, n);
      if (w == 0.0) continue;
      out.noalias() += w * (b.col(m) * b.col(m).adjoint());
    }
  DensityOp state(dim_, 1, std::move(out));
  state.hermitize();
  return state;
}

DensityOp AncillaReadout::reduced() const {
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (const CMatrix &b : branches_) out.noalias() += b * b.adjoint();
  DensityOp state(dim_, 1, std::move(out));
  state.hermitize();
  return state;
}

}  // namespace cvforge::fock

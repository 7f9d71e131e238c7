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

#include "fock/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "common/parallel.hpp"
#include "fock/kernels.hpp"
#include "fock/spectral.hpp"

namespace cvforge::fock {
namespace {

void check_axis(const std::vector<double> &axis, const char *name) {
  require(!axis.empty(), ErrorCode::invalid_parameter, std::string(name) + " axis is empty");
  for (std::size_t i = 1; i < axis.size(); ++i)
    require(axis[i] > axis[i - 1], ErrorCode::invalid_parameter,
            std::string(name) + " axis must be strictly increasing");
}

double spacing(const std::vector<double> &axis) {
  return axis.size() < 2 ? 1.0 : (axis.back() - axis.front()) / double(axis.size() - 1);
}

}  // namespace

double WignerGrid::integral() const {
  return values.sum() * spacing(q_axis) * spacing(p_axis);
}

WignerGrid wigner(const DensityOp &rho, const std::vector<double> &q_axis,
                  const std::vector<double> &p_axis, const WignerOptions &opts) {
  require(rho.modes() == 1, ErrorCode::dimension_mismatch, "wigner needs a single-mode state");
  check_axis(q_axis, "q");
  check_axis(p_axis, "p");
  const int d = rho.dim();

  double max_alpha = 0.0;
  for (double q : {q_axis.front(), q_axis.back()})
    for (double p : {p_axis.front(), p_axis.back()})
      max_alpha = std::max(max_alpha, std::hypot(q, p) / std::sqrt(2.0));
  int size = d + std::max(opts.pad, 0);
  if (opts.auto_pad) {
    const double need = std::sqrt(double(d)) + max_alpha + opts.margin;
    size = std::max(size, static_cast<int>(std::ceil(need * need)));
  }

  // rho = sum_k |v_k><v_k|; W needs |<n| D(-alpha) |v_k>|^2 in the padded space.
  const CMatrix comps = purify_columns(rho.matrix());
  const Spectrum &spec = spectrum(Generator::momentum, size);
  const CMatrix top_adj = spec.vectors.topRows(d).adjoint();
  RVector parity(size);
  for (int n = 0; n < size; ++n) parity(n) = (n % 2 == 0) ? 1.0 : -1.0;

  WignerGrid grid{q_axis, p_axis, RMatrix::Zero(q_axis.size(), p_axis.size())};
  parallel_for(q_axis.size(), [&](std::size_t iq) {
    CVector rot(d), y(size), z(size);
    for (std::size_t ip = 0; ip < p_axis.size(); ++ip) {
      const Complex alpha(q_axis[iq] / std::sqrt(2.0), p_axis[ip] / std::sqrt(2.0));
      const double phi = std::arg(alpha);
      // D(-alpha) = R(phi) exp(+i sqrt(2)|alpha| P) R(-phi); the outer R drops out of |.|^2.
      for (int k = 0; k < d; ++k) rot(k) = std::polar(1.0, -phi * k);
      const double t = -std::sqrt(2.0) * std::abs(alpha);
      double w = 0.0;
      for (Eigen::Index c = 0; c < comps.cols(); ++c) {
        y.noalias() = top_adj * rot.cwiseProduct(comps.col(c));
        for (int n = 0; n < size; ++n) y(n) *= std::polar(1.0, -t * spec.values(n));
        z.noalias() = spec.vectors * y;
        w += parity.dot(z.cwiseAbs2());
      }
      grid.values(iq, ip) = w / std::numbers::pi;
    }
  });
  return grid;
}

double min_negativity(const WignerGrid &grid) { return grid.values.minCoeff(); }

std::vector<double> linspace(double lo, double hi, int count) {
  require(count >= 1, ErrorCode::invalid_parameter, "linspace needs at least one point");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / double(count - 1);
  return out;
}

}  // namespace cvforge::fock

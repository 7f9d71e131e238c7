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

#ifndef CVFORGE_FOCK_WIGNER_HPP_
#define CVFORGE_FOCK_WIGNER_HPP_

#include <vector>

#include "fock/types.hpp"

namespace cvforge::fock {

struct WignerGrid {
  std::vector<double> q_axis;
  std::vector<double> p_axis;
  RMatrix values;  // values(iq, ip), hbar = 1

  // Riemann sum of W over the grid cells.
  double integral() const;
};

struct WignerOptions {
  int pad = kDefaultPad;
  // Grow the working dimension so the displaced support of the state fits:
  // size >= (sqrt(dim) + max|alpha| + margin)^2.
  bool auto_pad = true;
  double margin = 6.0;
};

// W(q, p) = (1/pi) sum_n (-1)^n <n| D^dag(alpha) rho D(alpha) |n>,
// alpha = (q + i p)/sqrt(2), with the parity sum taken over the padded space.
WignerGrid wigner(const DensityOp &rho, const std::vector<double> &q_axis,
                  const std::vector<double> &p_axis, const WignerOptions &opts = {});

double min_negativity(const WignerGrid &grid);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace cvforge::fock

#endif  // CVFORGE_FOCK_WIGNER_HPP_

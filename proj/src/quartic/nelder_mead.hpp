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

#ifndef CVFORGE_QUARTIC_NELDER_MEAD_HPP_
#define CVFORGE_QUARTIC_NELDER_MEAD_HPP_

#include <functional>
#include <vector>

namespace cvforge::quartic {

struct NelderMeadOptions {
  std::vector<double> init_step;  // per coordinate; empty means 0.1 everywhere
  double f_tol = 1e-8;
  double x_tol = 1e-8;
  int max_iter = 500;  // per simplex run
  int restarts = 3;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(const std::vector<double> &)>;

// Downhill simplex with reflection 1, expansion 2, contraction 0.5 and shrink
// 0.5. After a converged run the simplex is rebuilt around the best point and
// the search repeats until a restart no longer improves f by more than f_tol.
NelderMeadResult nelder_mead(const Objective &objective, std::vector<double> x0,
                             const NelderMeadOptions &opts = {});

}  // namespace cvforge::quartic

#endif  // CVFORGE_QUARTIC_NELDER_MEAD_HPP_

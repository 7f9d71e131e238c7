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

#include "quartic/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/error.hpp"

namespace cvforge::quartic {
namespace {

using Point = std::vector<double>;

Point affine(const Point &a, const Point &b, double t) {  // a + t (b - a)
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

struct RunResult {
  Point x;
  double f;
  int iterations;
  int evaluations;
  bool converged;
};

RunResult run_simplex(const Objective &objective, const Point &x0, const std::vector<double> &step,
                      const NelderMeadOptions &opts) {
  const std::size_t n = x0.size();
  std::vector<Point> pts(n + 1, x0);
  std::vector<double> fs(n + 1);
  int evals = 0;
  auto eval = [&](const Point &p) {
    ++evals;
    const double v = objective(p);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (std::size_t i = 0; i <= n; ++i) fs[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  int iter = 0;
  bool converged = false;
  for (; iter < opts.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fs[a] < fs[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double f_spread = std::abs(fs[worst] - fs[best]);
    double x_spread = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        x_spread = std::max(x_spread, std::abs(pts[i][k] - pts[best][k]));
    if (f_spread <= opts.f_tol && x_spread <= opts.x_tol) {
      converged = true;
      break;
    }

    Point centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / double(n);
    }

    const Point xr = affine(centroid, pts[worst], -1.0);
    const double fr = eval(xr);
    if (fr < fs[best]) {
      const Point xe = affine(centroid, pts[worst], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        fs[worst] = fe;
      } else {
        pts[worst] = xr;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second]) {
      pts[worst] = xr;
      fs[worst] = fr;
      continue;
    }
    // Outside contraction when the reflected point beats the worst, inside otherwise.
    const bool outside = fr < fs[worst];
    const Point xc = outside ? affine(centroid, xr, 0.5) : affine(centroid, pts[worst], 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fs[worst])) {
      pts[worst] = xc;
      fs[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = affine(pts[best], pts[i], 0.5);
      fs[i] = eval(pts[i]);
    }
  }
  const std::size_t best =
      std::min_element(fs.begin(), fs.end()) - fs.begin();
  return RunResult{pts[best], fs[best], iter, evals, converged};
}

}  // namespace

NelderMeadResult nelder_mead(const Objective &objective, std::vector<double> x0,
                             const NelderMeadOptions &opts) {
  require(!x0.empty(), ErrorCode::invalid_parameter, "Nelder-Mead needs at least one coordinate");
  std::vector<double> step = opts.init_step;
  if (step.empty()) step.assign(x0.size(), 0.1);
  require(step.size() == x0.size(), ErrorCode::invalid_parameter,
          "init_step length must match x0");
  require(std::isfinite(objective(x0)), ErrorCode::numeric, "objective is not finite at x0");

  NelderMeadResult out;
  RunResult run = run_simplex(objective, x0, step, opts);
  out.iterations = run.iterations;
  out.evaluations = run.evaluations + 1;
  for (int k = 0; k < opts.restarts && run.converged; ++k) {
    // Restart around the incumbent with the original step lengths.
    RunResult again = run_simplex(objective, run.x, step, opts);
    out.iterations += again.iterations;
    out.evaluations += again.evaluations;
    const bool improved = again.f < run.f - opts.f_tol;
    if (again.f <= run.f) {
      run = again;
    }
    if (!improved) break;
  }
  out.x = run.x;
  out.f = run.f;
  out.converged = run.converged;
  return out;
}

}  // namespace cvforge::quartic

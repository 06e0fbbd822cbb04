// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXDET_RELAX_HPP
#define MAXDET_RELAX_HPP

#include <span>
#include <vector>

#include "maxdet/linalg.hpp"

namespace maxdet {

// { x in [0,1]^n : sum x = r, x_j = 1 for j in fixed_one }.
struct CappedSimplex {
  int n = 0;
  int r = 0;
  std::vector<int> fixed_one;

  bool contains(std::span<const double> x, double feas_tol = 1e-9) const;
};

// Euclidean projection of y onto the capped simplex.  Exact breakpoint
// sweep on the Lagrange multiplier; the result satisfies the equality
// constraint to 1e-12 absolute.
// Throws InfeasibleDomain when the domain is empty
// (r < |fixed_one| or r - |fixed_one| > n - |fixed_one|).
std::vector<double> project_capped_simplex(std::span<const double> y,
                                           const CappedSimplex& dom);

// Duality-style upper bound on the concave relaxation
//     max ln det(V^T Diag(x) V)  over the capped simplex:
// f(x) + max over vertices w of grad f(x)^T (w - x).  Valid at every
// feasible x with finite objective.
// Throws SingularWeighting when the objective is not finite at x.
double certificate_ub(std::span<const double> x, const InstanceMatrix& v,
                      const CappedSimplex& dom);

struct RelaxOptions {
  // Converged when cert - obj <= tol * max(1, |obj|).
  double tol = 1e-6;
  int max_iters = 5000;
  bool record_trace = false;
};

struct RelaxIterate {
  double obj_ln;   // objective after the step (-inf while ridged)
  double cert_ln;  // certificate at the iterate (+inf while ridged)
  double step;     // accepted step size
};

struct RelaxSolution {
  std::vector<double> x;
  double obj_ln = 0.0;      // ln det at the final iterate
  double cert_ub_ln = 0.0;  // minimum certificate seen across iterates
  int iters = 0;
  bool converged = false;
  std::vector<RelaxIterate> trace;  // filled when record_trace
};

// Projected gradient ascent with backtracking line search (halving from
// 1.0, sufficient-increase constant 1e-4).  Starts from x = 1 on the
// fixed rows and uniform mass elsewhere; when the objective is -inf at
// the start, a ridge of 1e-10 times the mean squared row norm is added
// to the weighted Gram matrix for line-search evaluation only, and is
// dropped as soon as the true objective turns finite.  Certificates are
// computed only from unridged values.
// Throws InfeasibleDomain for an empty domain and StartSingular when
// even the ridged objective is -inf at the start.
RelaxSolution solve_lp_relaxation(const InstanceMatrix& v,
                                  std::span<const int> fixed = {},
                                  const RelaxOptions& opts = {});

struct DominanceResult {
  double ub_raw_ln = 0.0;   // certified UB on the original rows
  double ub_proj_ln = 0.0;  // certified UB on the projected rows
  bool holds = false;       // ub_proj_ln <= ub_raw_ln + 1e-4
};

// Solves the relaxation on V and on the rows projected against the
// fixed set; the projected bound must not exceed the raw bound (up to
// slack) whenever both solves converge.
DominanceResult lp_projection_dominance(const InstanceMatrix& v,
                                        std::span<const int> fixed,
                                        const RelaxOptions& opts = {});

}  // namespace maxdet

#endif  // MAXDET_RELAX_HPP

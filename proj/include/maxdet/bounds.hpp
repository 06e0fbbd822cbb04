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

#ifndef MAXDET_BOUNDS_HPP
#define MAXDET_BOUNDS_HPP

#include <span>
#include <vector>

#include "maxdet/linalg.hpp"

namespace maxdet {

// Upper bound on a node's objective, kept in log2 to avoid overflow.
struct BoundValue {
  // Bound on log2 |det V_{J u K}| over completions K of the fixed set.
  double log2_absdet_ub = 0.0;
  // Bound on log2 det(M_{J u K}) = 2 * log2_absdet_ub.
  double log2_det_m_ub = 0.0;
  // Rows whose norms realize the bound: the fixed rows followed by the
  // selected candidates.
  std::vector<int> support;
};

// Hadamard-type bound on the projected rows: the product of fixed-row
// projected norms times the largest r - |J| candidate projected norms.
// Candidates must be disjoint from the fixed set.  Ties in the norm
// selection break toward the smaller row index.
// Throws InfeasibleNode when fewer than r - |J| candidates have a
// strictly positive projected norm.
BoundValue hadamard_bound(const ProjectedRows& state,
                          std::span<const int> candidates);

// True when the projected bound is no larger than the same bound formed
// from raw (unprojected) row norms, up to slack 1e-9 in log2.
bool bound_dominance_check(const InstanceMatrix& v, std::span<const int> fixed);

}  // namespace maxdet

#endif  // MAXDET_BOUNDS_HPP

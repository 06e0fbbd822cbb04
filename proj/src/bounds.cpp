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

#include "maxdet/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

// Indices of the `need` largest values, ties toward the smaller index.
std::vector<int> top_indices(std::span<const int> candidates,
                             const std::vector<double>& value, int need) {
  std::vector<int> order(candidates.begin(), candidates.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (value[a] != value[b]) return value[a] > value[b];
    return a < b;
  });
  order.resize(need);
  return order;
}

}  // namespace

BoundValue hadamard_bound(const ProjectedRows& state,
                          std::span<const int> candidates) {
  const int need = state.r() - static_cast<int>(state.included().size());
  assert(need >= 0);
  std::vector<double> norm2(state.n());
  int positive = 0;
  for (const int i : candidates) {
    assert(!state.is_included(i));
    norm2[i] = state.tilde_norm2(i);
    if (norm2[i] > 0.0) ++positive;
  }
  if (positive < need)
    throw InfeasibleNode("only " + std::to_string(positive) + " of " +
                         std::to_string(need) +
                         " required candidates have positive projected norm");

  BoundValue out;
  out.support = state.included();
  double bound = state.log_volume2();
  for (const int i : top_indices(candidates, norm2, need)) {
    bound += 0.5 * std::log2(norm2[i]);
    out.support.push_back(i);
  }
  out.log2_absdet_ub = bound;
  out.log2_det_m_ub = 2.0 * bound;
  return out;
}

bool bound_dominance_check(const InstanceMatrix& v,
                           std::span<const int> fixed) {
  const ProjectedRows state = project_rows(v, fixed);
  std::vector<int> candidates;
  for (int i = 0; i < v.n(); ++i)
    if (!state.is_included(i)) candidates.push_back(i);
  const double projected = hadamard_bound(state, candidates).log2_absdet_ub;

  // The same bound on the raw rows.
  std::vector<double> norm2(v.n());
  for (const int i : candidates) norm2[i] = v.row_norm2(i);
  double raw = 0.0;
  for (const int j : fixed) raw += 0.5 * std::log2(v.row_norm2(j));
  const int need = v.r() - static_cast<int>(fixed.size());
  std::vector<int> order(candidates.begin(), candidates.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (norm2[a] != norm2[b]) return norm2[a] > norm2[b];
    return a < b;
  });
  for (int k = 0; k < need; ++k) raw += 0.5 * std::log2(norm2[order[k]]);

  return projected <= raw + 1e-9;
}

}  // namespace maxdet

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

#ifndef MAXDET_BNB_HPP
#define MAXDET_BNB_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "maxdet/bounds.hpp"
#include "maxdet/linalg.hpp"

namespace maxdet {

// A subproblem: rows in state->included() are forced in, rows with
// excluded[i] != 0 are forced out, the rest are undecided.  Exclude
// children share their parent's projection state.
struct BnbNode {
  std::shared_ptr<const ProjectedRows> state;
  std::vector<std::uint8_t> excluded;
  BoundValue bound;

  int depth() const { return static_cast<int>(state->included().size()); }
};

struct SolveOptions {
  double time_limit_s = 600.0;
  // Pruning slack on log2 det(M): children whose bound does not beat the
  // incumbent by more than this are cut.
  double eps_opt = 1e-9;
};

// Snapshot passed to the node observer just before a node is expanded.
struct NodeEvent {
  const BnbNode& node;
  double incumbent_log2;  // best known log2 det(M)
  double ub_log2;         // best current upper bound on the optimum
  std::int64_t nodes_explored;
};
using NodeObserver = std::function<void(const NodeEvent&)>;

struct SolveReport {
  int n = 0;
  int r = 0;
  double lb_log2 = 0.0;  // log2 det(M) of the best subset found
  double ub_log2 = 0.0;  // proof bound; equals lb_log2 on completion
  double gap = 0.0;      // |ub - lb| / max(|ub|, |lb|, 1e-8)
  std::vector<int> subset;  // best subset, 1-based, sorted ascending
  bool optimal = false;
  std::int64_t nodes_explored = 0;
  double time_seconds = 0.0;
};

struct GreedyResult {
  std::vector<int> subset;  // 0-based, sorted ascending
  double log2_det_m = 0.0;
};

// Warm start: repeatedly includes the candidate with the largest
// projected norm (ties toward the smaller index) until |J| = r.
// Throws Infeasible when the greedy chain hits only zero pivots, and
// DependentFixedRows when the fixed rows themselves are dependent.
GreedyResult greedy_incumbent(const InstanceMatrix& v,
                              std::span<const int> fixed);

// Children of a non-leaf node: the include child (pivot = undecided row
// of largest projected norm, ties toward the smaller index) first, then
// the exclude child.  Children whose bound cannot beat `incumbent_log2`
// by more than eps_opt, or that became infeasible, are dropped.
std::vector<BnbNode> node_expand(const BnbNode& node, double incumbent_log2,
                                 double eps_opt = 1e-9);

// Depth-first branch and bound, include child explored first.
// Deterministic for fixed inputs.  On timeout the report carries the
// best bound over the open nodes and optimal = false.
// Throws Infeasible when no full-rank subset completes `fixed`.
SolveReport solve(const InstanceMatrix& v, std::span<const int> fixed = {},
                  const SolveOptions& opts = {},
                  const NodeObserver& on_node = nullptr);

}  // namespace maxdet

#endif  // MAXDET_BNB_HPP

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

#include "maxdet/bnb.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>

#include "maxdet/errors.hpp"
#include "maxdet/report.hpp"

namespace maxdet {

namespace {

// Undecided row with the largest projected norm, ties toward the
// smaller index, skipping rows whose pivot would count as zero;
// -1 when every undecided row is numerically zero.
int select_pivot(const ProjectedRows& state,
                 const std::vector<std::uint8_t>& excluded) {
  std::vector<int> order;
  for (int i = 0; i < state.n(); ++i)
    if (!state.is_included(i) && !excluded[i]) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (state.tilde_norm2(a) != state.tilde_norm2(b))
      return state.tilde_norm2(a) > state.tilde_norm2(b);
    return a < b;
  });
  for (const int i : order)
    if (state.tilde_norm2(i) > tol::kZero * tol::kZero * state.base().row_norm2(i))
      return i;
  return -1;
}

std::vector<int> undecided_rows(const ProjectedRows& state,
                                const std::vector<std::uint8_t>& excluded,
                                int skip = -1) {
  std::vector<int> out;
  for (int i = 0; i < state.n(); ++i)
    if (!state.is_included(i) && !excluded[i] && i != skip) out.push_back(i);
  return out;
}

}  // namespace

GreedyResult greedy_incumbent(const InstanceMatrix& v,
                              std::span<const int> fixed) {
  ProjectedRows state = project_rows(v, fixed);
  const std::vector<std::uint8_t> no_exclusions(v.n(), 0);
  while (static_cast<int>(state.included().size()) < v.r()) {
    const int pick = select_pivot(state, no_exclusions);
    if (pick < 0)
      throw Infeasible("no full-rank completion of the fixed rows exists");
    state = include_row(state, pick);
  }
  GreedyResult out;
  out.subset = state.included();
  std::sort(out.subset.begin(), out.subset.end());
  out.log2_det_m = 2.0 * state.log_volume2();
  return out;
}

std::vector<BnbNode> node_expand(const BnbNode& node, double incumbent_log2,
                                 double eps_opt) {
  const ProjectedRows& state = *node.state;
  assert(static_cast<int>(state.included().size()) < state.r());

  std::vector<BnbNode> children;
  const int pivot = select_pivot(state, node.excluded);
  if (pivot < 0) return children;  // all undecided rows are zero: fathomed

  const std::vector<int> rest = undecided_rows(state, node.excluded, pivot);

  // Include child.
  {
    BnbNode child;
    child.state = std::make_shared<ProjectedRows>(include_row(state, pivot));
    child.excluded = node.excluded;
    try {
      child.bound = hadamard_bound(*child.state, rest);
      if (child.bound.log2_det_m_ub > incumbent_log2 + eps_opt)
        children.push_back(std::move(child));
    } catch (const InfeasibleNode&) {
    }
  }
  // Exclude child shares the parent's projection.
  {
    BnbNode child;
    child.state = node.state;
    child.excluded = node.excluded;
    child.excluded[pivot] = 1;
    try {
      child.bound = hadamard_bound(state, rest);
      if (child.bound.log2_det_m_ub > incumbent_log2 + eps_opt)
        children.push_back(std::move(child));
    } catch (const InfeasibleNode&) {
    }
  }
  return children;
}

SolveReport solve(const InstanceMatrix& v, std::span<const int> fixed,
                  const SolveOptions& opts, const NodeObserver& on_node) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  std::shared_ptr<const ProjectedRows> root_state;
  try {
    root_state = std::make_shared<ProjectedRows>(project_rows(v, fixed));
  } catch (const DependentFixedRows& e) {
    throw Infeasible(std::string("fixed rows are dependent: ") + e.what());
  }

  GreedyResult greedy = greedy_incumbent(v, fixed);
  double incumbent = greedy.log2_det_m;
  std::vector<int> best_subset = greedy.subset;

  BnbNode root;
  root.state = root_state;
  root.excluded.assign(v.n(), 0);
  root.bound = hadamard_bound(*root_state, undecided_rows(*root_state,
                                                          root.excluded));

  std::vector<BnbNode> stack;
  stack.push_back(std::move(root));
  std::int64_t nodes = 0;
  bool timed_out = false;

  while (!stack.empty()) {
    if (elapsed() > opts.time_limit_s) {
      timed_out = true;
      break;
    }
    BnbNode node = std::move(stack.back());
    stack.pop_back();
    // The incumbent may have improved since this node was pushed.
    if (node.bound.log2_det_m_ub <= incumbent + opts.eps_opt) continue;
    ++nodes;

    if (on_node) {
      double ub_now = std::max(incumbent, node.bound.log2_det_m_ub);
      for (const BnbNode& open : stack)
        ub_now = std::max(ub_now, open.bound.log2_det_m_ub);
      on_node(NodeEvent{node, incumbent, ub_now, nodes});
    }

    if (static_cast<int>(node.state->included().size()) == v.r()) {
      const double value = 2.0 * node.state->log_volume2();
      if (value > incumbent) {
        incumbent = value;
        best_subset = node.state->included();
        std::sort(best_subset.begin(), best_subset.end());
      }
      continue;
    }

    std::vector<BnbNode> children = node_expand(node, incumbent, opts.eps_opt);
    // Include child is emitted first; push it last so it pops first.
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back(std::move(*it));
  }

  SolveReport report;
  report.n = v.n();
  report.r = v.r();
  report.lb_log2 = incumbent;
  report.ub_log2 = incumbent;
  if (timed_out)
    for (const BnbNode& open : stack)
      report.ub_log2 = std::max(report.ub_log2, open.bound.log2_det_m_ub);
  report.gap = normalized_gap(report.lb_log2, report.ub_log2);
  report.optimal = !timed_out;
  report.subset.reserve(best_subset.size());
  for (const int i : best_subset) report.subset.push_back(i + 1);
  report.nodes_explored = nodes;
  report.time_seconds = elapsed();
  return report;
}

}  // namespace maxdet

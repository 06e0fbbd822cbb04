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

#ifndef MAXDET_OCP_HPP
#define MAXDET_OCP_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "maxdet/linalg.hpp"

namespace maxdet {

// A graph instance on r vertices whose factor rows are the {0,1}
// incidence vectors of n distinct edges.  An r-edge selection is
// nonsingular exactly when every connected component it induces carries
// exactly one cycle and that cycle is odd; the selection's determinant
// is then +-2^k with k the number of components.
struct OcpInstance {
  int r = 0;  // vertices
  int n = 0;  // edges (rows)
  std::uint64_t seed = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based (u, v), u < v, sorted
  InstanceMatrix v;

  // Builds the incidence factor for explicitly given edges; used by
  // tests and by gen_ocp.  Throws RankDeficient when the edge set does
  // not span (some graphs on fewer than r effective vertices or
  // bipartite edge sets cannot carry a full-rank factor).
  static OcpInstance from_edges(int r, std::vector<std::pair<int, int>> edges,
                                std::uint64_t seed = 0);
};

// Samples n distinct edges of the complete graph on r vertices,
// uniformly without replacement, deterministically in `seed`.
// Throws BadDimensions unless 3 <= r and r <= n <= r(r-1)/2, and
// propagates RankDeficient when the sampled edge set has deficient
// incidence rank (possible: the sample may be bipartite).
OcpInstance gen_ocp(int r, int n, std::uint64_t seed);

struct SelectionCheck {
  int odd_cycle_count = 0;   // components that are odd unicyclic
  double absdet_log2 = 0.0;  // log2 |det| of the selected square block;
                             // -inf when the selection is singular
};

// Classifies an r-edge selection (0-based row indices) by its graph
// structure and cross-checks the implied determinant against a direct
// elimination on the selected rows.
// Throws BadSubset when the selection does not have exactly r distinct
// in-range indices.
SelectionCheck verify_selection(const OcpInstance& inst,
                                std::span<const int> selected_rows);

// Writes the factor rows as CSV (one edge incidence row per line).
void write_instance_csv(const OcpInstance& inst,
                        const std::filesystem::path& path);

}  // namespace maxdet

#endif  // MAXDET_OCP_HPP

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

#include "maxdet/ocp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

OcpInstance OcpInstance::from_edges(int r,
                                    std::vector<std::pair<int, int>> edges,
                                    std::uint64_t seed) {
  const int n = static_cast<int>(edges.size());
  std::sort(edges.begin(), edges.end());
  for (int i = 0; i < n; ++i) {
    const auto [u, w] = edges[i];
    if (u < 0 || w <= u || w >= r)
      throw BadSubset("edge (" + std::to_string(u) + ", " + std::to_string(w) +
                      ") is not an edge of the complete graph on " +
                      std::to_string(r) + " vertices");
    if (i > 0 && edges[i] == edges[i - 1])
      throw BadSubset("duplicate edge (" + std::to_string(u) + ", " +
                      std::to_string(w) + ")");
  }
  Matrix rows(n, r);
  for (int i = 0; i < n; ++i) {
    rows(i, edges[i].first) = 1.0;
    rows(i, edges[i].second) = 1.0;
  }
  return OcpInstance{r, n, seed, std::move(edges),
                     InstanceMatrix(std::move(rows))};
}

OcpInstance gen_ocp(int r, int n, std::uint64_t seed) {
  const int m = r * (r - 1) / 2;
  if (r < 3 || n < r || n > m)
    throw BadDimensions("need 3 <= r <= n <= r(r-1)/2, got r = " +
                        std::to_string(r) + ", n = " + std::to_string(n));
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first n entries are a uniform sample
  // without replacement (modulo the negligible modulo bias).
  for (int i = 0; i < n; ++i) {
    const std::uint64_t span = static_cast<std::uint64_t>(m - i);
    const int j = i + static_cast<int>(rng() % span);
    std::swap(pool[i], pool[j]);
  }
  // Edge t of the lexicographic enumeration (0,1), (0,2), ..., (1,2), ...
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int t = 0; t < n; ++t) {
    int id = pool[t];
    int u = 0;
    while (id >= r - 1 - u) {
      id -= r - 1 - u;
      ++u;
    }
    edges.emplace_back(u, u + 1 + id);
  }
  return OcpInstance::from_edges(r, std::move(edges), seed);
}

SelectionCheck verify_selection(const OcpInstance& inst,
                                std::span<const int> selected_rows) {
  const int r = inst.r;
  if (static_cast<int>(selected_rows.size()) != r)
    throw BadSubset("selection must have exactly " + std::to_string(r) +
                    " rows");
  std::vector<char> seen(inst.n, 0);
  for (const int i : selected_rows) {
    if (i < 0 || i >= inst.n) throw BadSubset("row index out of range");
    if (seen[i]) throw BadSubset("duplicate row in selection");
    seen[i] = 1;
  }

  // Adjacency of the selected subgraph.
  std::vector<std::vector<int>> adj(r);
  for (const int i : selected_rows) {
    const auto [u, w] = inst.edges[i];
    adj[u].push_back(w);
    adj[w].push_back(u);
  }

  // BFS components with 2-coloring.  A component on V vertices with E
  // edges is unicyclic iff E == V; its unique cycle is odd iff some
  // non-tree edge joins equal colors.
  std::vector<int> color(r, -1);
  int components = 0;
  int odd = 0;
  bool all_odd_unicyclic = true;
  for (int start = 0; start < r; ++start) {
    if (color[start] >= 0 || adj[start].empty()) continue;
    ++components;
    int vertices = 0;
    int degree_sum = 0;
    bool odd_closure = false;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      ++vertices;
      degree_sum += static_cast<int>(adj[u].size());
      for (const int w : adj[u]) {
        if (color[w] < 0) {
          color[w] = color[u] ^ 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          odd_closure = true;
        }
      }
    }
    const int edges_in_component = degree_sum / 2;
    if (edges_in_component != vertices)
      all_odd_unicyclic = false;
    else if (odd_closure)
      ++odd;
    else
      all_odd_unicyclic = false;
  }
  // Isolated vertices make the selection singular: their incidence
  // columns are zero inside the selected block.
  for (int u = 0; u < r; ++u)
    if (adj[u].empty()) all_odd_unicyclic = false;

  SelectionCheck out;
  if (all_odd_unicyclic && odd == components) {
    out.odd_cycle_count = odd;
    out.absdet_log2 = static_cast<double>(odd);
  } else {
    out.odd_cycle_count = 0;
    out.absdet_log2 = -std::numeric_limits<double>::infinity();
  }

  // Cross-check against direct elimination on the selected block.
  Matrix block(r, r);
  for (int k = 0; k < r; ++k) {
    const auto row = inst.v.row(selected_rows[k]);
    for (int j = 0; j < r; ++j) block(k, j) = row[j];
  }
  const double lu = log2_abs_det_lu(std::move(block));
  const bool both_singular = std::isinf(out.absdet_log2) && std::isinf(lu);
  if (!both_singular && std::abs(out.absdet_log2 - lu) > 1e-9)
    throw Error("selection check disagrees with elimination: structural " +
                std::to_string(out.absdet_log2) + " vs " + std::to_string(lu));
  return out;
}

void write_instance_csv(const OcpInstance& inst,
                        const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  for (int i = 0; i < inst.n; ++i) {
    const auto row = inst.v.row(i);
    for (int j = 0; j < inst.r; ++j) {
      if (j > 0) os << ',';
      os << (row[j] != 0.0 ? '1' : '0');
    }
    os << '\n';
  }
  os.flush();
  if (!os) throw IoError("failed while writing " + path.string());
}

}  // namespace maxdet

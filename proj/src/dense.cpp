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

#include "maxdet/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxdet {

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm2sq(std::span<const double> a) { return dot(a, a); }

void axpy(double c, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] -= c * x[k];
}

bool cholesky_in_place(Matrix& a, double rel_tol) {
  const int n = a.rows();
  assert(a.cols() == n);
  double max_pivot = 0.0;
  for (int k = 0; k < n; ++k) {
    double p = a(k, k);
    for (int q = 0; q < k; ++q) p -= a(k, q) * a(k, q);
    max_pivot = std::max(max_pivot, p);
    if (p <= 0.0 || p <= rel_tol * max_pivot) return false;
    const double lkk = std::sqrt(p);
    a(k, k) = lkk;
    for (int i = k + 1; i < n; ++i) {
      double s = a(i, k);
      for (int q = 0; q < k; ++q) s -= a(i, q) * a(k, q);
      a(i, k) = s / lkk;
    }
  }
  // Zero the strict upper triangle so the result is a clean factor.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = 0.0;
  return true;
}

double log2_abs_det_lu(Matrix a, double rel_tol) {
  const int n = a.rows();
  assert(a.cols() == n);
  if (n == 0) return 0.0;
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  if (scale == 0.0) return -std::numeric_limits<double>::infinity();
  double log2det = 0.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= rel_tol * scale)
      return -std::numeric_limits<double>::infinity();
    if (piv != k)
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
    log2det += std::log2(best);
    for (int i = k + 1; i < n; ++i) {
      const double m = a(i, k) / a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  return log2det;
}

void forward_subst(const Matrix& l, std::span<double> b) {
  const int n = l.rows();
  assert(l.cols() == n && static_cast<int>(b.size()) == n);
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int j = 0; j < i; ++j) s -= l(i, j) * b[j];
    b[i] = s / l(i, i);
  }
}

std::vector<int> pivoted_column_basis(const Matrix& a, double tol) {
  const int n = a.rows();
  const int m = a.cols();
  // Residual columns, column-major for contiguous updates.
  std::vector<std::vector<double>> col(m, std::vector<double>(n));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) col[j][i] = a(i, j);

  std::vector<int> selected;
  std::vector<char> used(m, 0);
  double first_pivot = 0.0;
  while (static_cast<int>(selected.size()) < std::min(n, m)) {
    int best = -1;
    double best_norm2 = 0.0;
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      const double nn = norm2sq(col[j]);
      if (best < 0 || nn > best_norm2) {
        best = j;
        best_norm2 = nn;
      }
    }
    if (best < 0) break;
    const double pivot = std::sqrt(best_norm2);
    if (selected.empty()) first_pivot = pivot;
    if (pivot <= tol * first_pivot) break;
    used[best] = 1;
    selected.push_back(best);
    // Orthogonalize the remaining columns against the accepted one.
    const std::vector<double>& q = col[best];
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      const double c = dot(q, col[j]) / best_norm2;
      axpy(c, q, col[j]);
    }
  }
  return selected;
}

}  // namespace maxdet

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

#include "maxdet/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

// Subtracts from `row` its components along the orthogonal basis rows
// `basis[k]` of `t`, all coefficients taken against the unmodified row.
// A second sweep runs only for components that rounding left visible.
void orthogonalize_against(Matrix& t, std::span<double> row,
                           std::span<const int> basis,
                           std::span<const double> basis_norm2) {
  if (basis.empty()) return;
  std::vector<double> c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    c[k] = dot(t.row(basis[k]), row) / basis_norm2[k];
  for (std::size_t k = 0; k < basis.size(); ++k)
    axpy(c[k], t.row(basis[k]), row);
  const double rn = std::sqrt(norm2sq(row));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto b = t.row(basis[k]);
    const double ck = dot(b, row) / basis_norm2[k];
    if (std::abs(ck) * std::sqrt(basis_norm2[k]) > tol::kOrth * rn)
      axpy(ck, b, row);
  }
}

}  // namespace

InstanceMatrix::InstanceMatrix(Matrix rows) : v_(std::move(rows)) {
  const int n = v_.rows();
  const int r = v_.cols();
  if (r < 1 || n < r)
    throw BadDimensions("instance must be n x r with n >= r >= 1, got " +
                        std::to_string(n) + " x " + std::to_string(r));
  const std::vector<int> basis = pivoted_column_basis(v_, tol::kRank);
  if (static_cast<int>(basis.size()) < r)
    throw RankDeficient("instance columns are numerically dependent (rank " +
                        std::to_string(basis.size()) + " of " +
                        std::to_string(r) + ")");
  row_norm2_.resize(n);
  for (int i = 0; i < n; ++i) row_norm2_[i] = norm2sq(v_.row(i));
}

InstanceMatrix InstanceMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int r = n > 0 ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(n, r);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != r)
      throw BadDimensions("ragged row list");
    for (int j = 0; j < r; ++j) m(i, j) = rows[i][j];
  }
  return InstanceMatrix(std::move(m));
}

ProjectedRows project_rows(const InstanceMatrix& v,
                           std::span<const int> fixed) {
  const int n = v.n();
  ProjectedRows out;
  out.base_ = &v;
  out.in_j_.assign(n, 0);
  out.tilde_ = v.data();
  out.tilde_norm2_.resize(n);

  std::vector<double> basis_norm2;
  for (const int j : fixed) {
    if (j < 0 || j >= n) throw BadSubset("row index out of range");
    if (out.in_j_[j]) throw BadSubset("duplicate fixed row");
    orthogonalize_against(out.tilde_, out.tilde_.row(j), out.included_,
                          basis_norm2);
    const double nn = norm2sq(out.tilde_.row(j));
    if (nn <= tol::kZero * tol::kZero * v.row_norm2(j))
      throw DependentFixedRows("fixed row " + std::to_string(j) +
                               " lies in the span of earlier fixed rows");
    out.included_.push_back(j);
    out.in_j_[j] = 1;
    basis_norm2.push_back(nn);
    out.log_volume2_ += 0.5 * std::log2(nn);
  }
  for (int i = 0; i < n; ++i) {
    if (out.in_j_[i]) continue;
    orthogonalize_against(out.tilde_, out.tilde_.row(i), out.included_,
                          basis_norm2);
  }
  for (int i = 0; i < n; ++i) out.tilde_norm2_[i] = norm2sq(out.tilde_.row(i));
  return out;
}

ProjectedRows include_row(const ProjectedRows& state, int i) {
  const int n = state.n();
  if (i < 0 || i >= n || state.is_included(i))
    throw BadSubset("row " + std::to_string(i) +
                    " is not available for inclusion");
  const double pivot2 = state.tilde_norm2(i);
  if (pivot2 <= tol::kZero * tol::kZero * state.base().row_norm2(i))
    throw ZeroPivot("projected norm of row " + std::to_string(i) +
                    " is numerically zero");

  ProjectedRows out = state;
  const auto p = out.tilde_.row(i);
  for (int k = 0; k < n; ++k) {
    if (k == i || out.in_j_[k]) continue;
    auto row = out.tilde_.row(k);
    double c = dot(p, row) / pivot2;
    axpy(c, p, row);
    // Clean up once if cancellation left a visible component along p.
    c = dot(p, row) / pivot2;
    if (std::abs(c) > tol::kOrth) axpy(c, p, row);
    out.tilde_norm2_[k] = norm2sq(row);
  }
  out.included_.push_back(i);
  out.in_j_[i] = 1;
  out.log_volume2_ += 0.5 * std::log2(pivot2);
  return out;
}

double logdet_weighted(const InstanceMatrix& v, std::span<const double> x) {
  const int n = v.n();
  const int r = v.r();
  assert(static_cast<int>(x.size()) == n);
  Matrix a(r, r);
  for (int i = 0; i < n; ++i) {
    const double w = x[i];
    if (w == 0.0) continue;
    const auto vi = v.row(i);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q <= p; ++q) a(p, q) += w * vi[p] * vi[q];
  }
  for (int p = 0; p < r; ++p)
    for (int q = p + 1; q < r; ++q) a(p, q) = a(q, p);
  if (!cholesky_in_place(a, tol::kPsd))
    return -std::numeric_limits<double>::infinity();
  double ld = 0.0;
  for (int k = 0; k < r; ++k) ld += std::log(a(k, k));
  return 2.0 * ld;
}

std::vector<double> grad_logdet_weighted(const InstanceMatrix& v,
                                         std::span<const double> x) {
  const int n = v.n();
  const int r = v.r();
  assert(static_cast<int>(x.size()) == n);
  Matrix a(r, r);
  for (int i = 0; i < n; ++i) {
    const double w = x[i];
    if (w == 0.0) continue;
    const auto vi = v.row(i);
    for (int p = 0; p < r; ++p)
      for (int q = 0; q <= p; ++q) a(p, q) += w * vi[p] * vi[q];
  }
  for (int p = 0; p < r; ++p)
    for (int q = p + 1; q < r; ++q) a(p, q) = a(q, p);
  if (!cholesky_in_place(a, tol::kPsd))
    throw SingularWeighting("weighted Gram matrix is numerically singular");
  std::vector<double> g(n);
  std::vector<double> y(r);
  for (int i = 0; i < n; ++i) {
    const auto vi = v.row(i);
    for (int k = 0; k < r; ++k) y[k] = vi[k];
    forward_subst(a, y);
    g[i] = norm2sq(y);
  }
  return g;
}

}  // namespace maxdet

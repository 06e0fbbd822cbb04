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

#ifndef MAXDET_LINALG_HPP
#define MAXDET_LINALG_HPP

#include <span>
#include <vector>

#include "maxdet/dense.hpp"

namespace maxdet {

// Numerical tolerances shared across the library.
namespace tol {
// Relative pivot threshold for rank decisions.
inline constexpr double kRank = 1e-10;
// Relative threshold below which a projected row counts as zero.
inline constexpr double kZero = 1e-12;
// Orthogonality slack that triggers one re-orthogonalization pass.
inline constexpr double kOrth = 1e-8;
// Relative Cholesky pivot threshold for "numerically PSD but singular".
inline constexpr double kPsd = 1e-12;
}  // namespace tol

// A tall factor V in R^{n x r} (rows are observations) with full column
// rank, verified at construction.  The solved problem is
//     max det(V_K V_K^T)  over row subsets K of size r,
// equivalently max (det V_K)^2.
class InstanceMatrix {
 public:
  // Takes ownership of `rows` (n x r, n >= r >= 1).
  // Throws RankDeficient when the columns are numerically dependent,
  // BadDimensions when n < r or r < 1.
  explicit InstanceMatrix(Matrix rows);

  static InstanceMatrix from_rows(
      const std::vector<std::vector<double>>& rows);

  int n() const { return v_.rows(); }
  int r() const { return v_.cols(); }
  std::span<const double> row(int i) const { return v_.row(i); }
  double row_norm2(int i) const { return row_norm2_[i]; }
  const Matrix& data() const { return v_; }

 private:
  Matrix v_;
  std::vector<double> row_norm2_;  // squared Euclidean row norms
};

// Rows of an instance after orthogonal projection against the rows fixed
// in J.  Row i of `tilde` is the component of v_i orthogonal to
// span{v_j : j in J}; rows in J hold their own orthogonalized vectors.
// For any completion K of J, |det V_{J u K}| = |det Vt_{J u K}|, and the
// Gram volume of the J rows is carried in log_volume2().
//
// Instances are immutable; include_row() produces a child state.  The
// referenced InstanceMatrix must outlive every ProjectedRows built on it.
class ProjectedRows {
 public:
  const InstanceMatrix& base() const { return *base_; }
  int n() const { return tilde_.rows(); }
  int r() const { return tilde_.cols(); }

  // Fixed rows in inclusion order.
  const std::vector<int>& included() const { return included_; }
  bool is_included(int i) const { return in_j_[i] != 0; }

  std::span<const double> tilde_row(int i) const { return tilde_.row(i); }
  double tilde_norm2(int i) const { return tilde_norm2_[i]; }
  const Matrix& tilde() const { return tilde_; }

  // sum_{j in J} log2 ||vt_j||, i.e. log2 |det| of the J block of any
  // completion's factor that is attributable to the fixed rows.
  double log_volume2() const { return log_volume2_; }

 private:
  friend ProjectedRows project_rows(const InstanceMatrix&,
                                    std::span<const int>);
  friend ProjectedRows include_row(const ProjectedRows&, int);

  const InstanceMatrix* base_ = nullptr;
  std::vector<int> included_;
  std::vector<char> in_j_;
  Matrix tilde_;
  std::vector<double> tilde_norm2_;
  double log_volume2_ = 0.0;
};

// Orthogonalizes the fixed rows in the order given and projects every
// other row onto the orthogonal complement of their span.
// Throws DependentFixedRows when a fixed row's projected norm falls
// below tol::kZero times its original norm.
ProjectedRows project_rows(const InstanceMatrix& v, std::span<const int> fixed);

// Child state with row i moved into the fixed set.  Single subtraction
// per remaining row; equals project_rows(v, J + [i]) up to rounding.
// Throws ZeroPivot when row i's projected norm is numerically zero.
ProjectedRows include_row(const ProjectedRows& state, int i);

// ln det(V^T Diag(x) V) for weights x in [0, 1]^n, or -inf when the
// weighted Gram matrix is numerically singular.
double logdet_weighted(const InstanceMatrix& v, std::span<const double> x);

// Gradient of x -> ln det(V^T Diag(x) V): g_i = v_i^T (V^T Diag(x) V)^{-1} v_i.
// Throws SingularWeighting when the weighted Gram matrix is singular.
std::vector<double> grad_logdet_weighted(const InstanceMatrix& v,
                                         std::span<const double> x);

}  // namespace maxdet

#endif  // MAXDET_LINALG_HPP

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

#ifndef MAXDET_DENSE_HPP
#define MAXDET_DENSE_HPP

#include <cassert>
#include <span>
#include <vector>

namespace maxdet {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {
    assert(rows >= 0 && cols >= 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<double> row(int i) {
    assert(i >= 0 && i < rows_);
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<const double> row(int i) const {
    assert(i >= 0 && i < rows_);
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2sq(std::span<const double> a);

// y -= c * x
void axpy(double c, std::span<const double> x, std::span<double> y);

// Lower Cholesky factor of a symmetric matrix held in `a` (full storage,
// only the lower triangle is read).  Returns false when a pivot is
// nonpositive or falls below rel_tol times the largest pivot seen so far;
// `a` then holds a partial factor and must be discarded.
bool cholesky_in_place(Matrix& a, double rel_tol);

// log2 |det A| via LU with partial pivoting; -inf for numerically
// singular input (pivot below rel_tol times the largest row maximum).
double log2_abs_det_lu(Matrix a, double rel_tol = 1e-13);

// Solves L y = b for lower-triangular L in place of b.
void forward_subst(const Matrix& l, std::span<double> b);

// Greedy column selection by largest residual norm (Gram-Schmidt with
// column pivoting).  Returns indices of columns, in selection order,
// whose residual norm exceeds tol times the first (largest) pivot.
std::vector<int> pivoted_column_basis(const Matrix& a, double tol);

}  // namespace maxdet

#endif  // MAXDET_DENSE_HPP

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

#ifndef MAXDET_CONIC_HPP
#define MAXDET_CONIC_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "maxdet/linalg.hpp"

namespace maxdet {

struct LinearTerm {
  int var = 0;
  double coeff = 0.0;
  bool operator==(const LinearTerm&) const = default;
};

enum class Relation { kEq, kLe, kGe };

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Relation rel = Relation::kEq;
  double rhs = 0.0;
  bool operator==(const LinearConstraint&) const = default;
};

// One symmetric coefficient entry of a PSD block: the lower-triangular
// position (row, col), row >= col, mirrored implicitly above the
// diagonal.
struct PsdEntry {
  int row = 0;
  int col = 0;
  double value = 0.0;
  bool operator==(const PsdEntry&) const = default;
};

// Coefficient matrix tied to a scalar variable (var >= 0) or constant
// (var == kConstantTerm).
struct PsdCoeff {
  static constexpr int kConstantTerm = -1;
  int var = kConstantTerm;
  std::vector<PsdEntry> entries;
  bool operator==(const PsdCoeff&) const = default;
};

// sum_k x_{var_k} * A_k + A_const  is required PSD.
struct PsdBlock {
  int order = 0;
  std::vector<PsdCoeff> coeffs;
  bool operator==(const PsdBlock&) const = default;
};

// One slot of an exponential-cone triple: a scalar variable or a
// constant.
struct ConeSlot {
  int var = -1;  // -1 means constant
  double constant = 0.0;
  bool operator==(const ConeSlot&) const = default;

  static ConeSlot variable(int v) { return {v, 0.0}; }
  static ConeSlot fixed(double c) { return {-1, c}; }
};

// (x1, x2, x3) with x1 >= x2 * exp(x3 / x2), x2 > 0 (plus the closure
// at x2 = 0).
struct ExpCone {
  ConeSlot x1, x2, x3;
  bool operator==(const ExpCone&) const = default;
};

// Variable box; infinities mark unbounded sides.
struct VarBound {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const VarBound&) const = default;
};

// A conic optimization model over scalar variables: maximize a linear
// objective subject to linear rows, variable boxes, PSD blocks and
// exponential cones.
struct ConicModel {
  int num_scalar_vars = 0;
  std::vector<LinearTerm> objective;  // maximized
  std::vector<LinearConstraint> linear_constraints;
  std::vector<VarBound> box_bounds;  // one per scalar variable
  std::vector<PsdBlock> psd_blocks;
  std::vector<ExpCone> exp_cones;
  // Provenance of the instance the model was built from.
  std::string name;
  int n = 0;
  int r = 0;
  std::vector<int> fixed_one;
  bool operator==(const ConicModel&) const = default;
};

// Index of entry (a, b), a >= b, of a lower-triangular r x r matrix in
// the model's packed z layout: diagonal first, then the strictly lower
// triangle column by column.
int packed_lower_index(int r, int a, int b);

// Relaxation with one 2r x 2r PSD block:
//   maximize sum_k s_k  s.t.
//   [ V^T Diag(x) V   L(z) ; L(z)^T  Diag(z_1..z_r) ] PSD,
//   (z_k, 1, s_k) in the exponential cone for the r diagonal entries,
//   x in the capped simplex (boxes + one equality row).
// Variables are x (n), z (r(r+1)/2, packed), s (r).
ConicModel build_expcone_lp(const InstanceMatrix& v,
                            std::span<const int> fixed = {});

// Lifted relaxation over Y in S^{n+1} (entrywise nonnegative, PSD, rows
// indexed 0..n) with one weighted block per column and per column
// difference, plus exponential cones on the zeroth column's z vector.
// Variables are the packed lower triangle of Y, then z^0..z^n, then s.
ConicModel build_sdp_relaxation(const InstanceMatrix& v,
                                std::span<const int> fixed = {});

enum class ModelFormat { kCbf, kJson };

// Serializes the model.  The CBF text form declares all scalar
// variables free and carries boxes as linear rows; the JSON form is a
// faithful field-for-field dump that read_model() inverts exactly.
// Byte-deterministic for a fixed model.
void write_model(const ConicModel& model, ModelFormat format,
                 const std::filesystem::path& path);

// Reads the JSON form back.  Throws ParseError (with the offending
// field) on unknown keys, missing keys or type mismatches, and IoError
// when the file cannot be read.
ConicModel read_model(const std::filesystem::path& path);

}  // namespace maxdet

#endif  // MAXDET_CONIC_HPP

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

#ifndef MAXDET_ERRORS_HPP
#define MAXDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxdet {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix whose columns are numerically dependent was passed where a
// full-column-rank factor is required.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

// Rows fixed for inclusion are linearly dependent: every completion is
// singular.
class DependentFixedRows : public Error {
 public:
  using Error::Error;
};

// The row chosen for inclusion has (numerically) zero projected norm.
class ZeroPivot : public Error {
 public:
  using Error::Error;
};

// The weighted Gram matrix is numerically singular where a finite
// log-determinant or its gradient is required.
class SingularWeighting : public Error {
 public:
  using Error::Error;
};

// A branch-and-bound node admits no nonsingular completion.
class InfeasibleNode : public Error {
 public:
  using Error::Error;
};

// The instance admits no full-rank subset at all.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// The capped simplex is empty for the requested (n, r, J).
class InfeasibleDomain : public Error {
 public:
  using Error::Error;
};

// The relaxation could not be started: the objective is -inf at the
// initial point even after the ridge retry.
class StartSingular : public Error {
 public:
  using Error::Error;
};

// Invalid (r, n) pair for graph instance generation.
class BadDimensions : public Error {
 public:
  using Error::Error;
};

// A row selection of the wrong cardinality was passed for verification.
class BadSubset : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.  `where()` carries a human-readable location
// such as "row 3, column 2" or a JSON field path.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string where)
      : Error(message + " (" + where + ")"), where_(std::move(where)) {}
  explicit ParseError(const std::string& message) : Error(message) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// A field failed to parse as a finite number.
class NonNumeric : public ParseError {
 public:
  using ParseError::ParseError;
};

// Rows of a CSV file have inconsistent field counts.
class RaggedRows : public ParseError {
 public:
  using ParseError::ParseError;
};

// No numerically independent column survives extraction.
class RankZero : public Error {
 public:
  using Error::Error;
};

// Column extraction kept as many columns as there are rows; the solver
// expects strictly more observations than features.
class NotTall : public Error {
 public:
  using Error::Error;
};

}  // namespace maxdet

#endif  // MAXDET_ERRORS_HPP

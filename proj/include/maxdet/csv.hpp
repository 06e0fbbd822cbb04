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

#ifndef MAXDET_CSV_HPP
#define MAXDET_CSV_HPP

#include <filesystem>
#include <string>

#include "maxdet/dense.hpp"
#include "maxdet/linalg.hpp"

namespace maxdet {

// A parsed numeric table, not yet validated as a solver instance.
struct RawMatrix {
  Matrix values;
  std::string source;        // file path the data came from
  bool header_skipped = false;

  int rows() const { return values.rows(); }
  int cols() const { return values.cols(); }
};

struct CsvOptions {
  char delimiter = ',';
  bool skip_header = false;
};

// Parses a delimited numeric file.  Blank lines are skipped.  Throws
// IoError when the file cannot be read, NonNumeric for fields that do
// not parse as finite numbers (with row/column in the message),
// RaggedRows for inconsistent field counts, and ParseError when no data
// rows remain.
RawMatrix load_csv(const std::filesystem::path& path,
                   const CsvOptions& options = {});

// Largest set of numerically independent columns, greedy by residual
// norm, returned in original column order as a solver instance.
// Throws RankZero when no column passes the threshold and NotTall when
// the kept column count is not smaller than the row count.
InstanceMatrix independent_columns(const RawMatrix& a,
                                   double tol = tol::kRank);

// Instance ingestion policy used by the command line tools: keep all
// columns when they are already independent, otherwise fall back to
// extraction.  The extraction path requires more rows than kept
// columns; the direct path also accepts square data.
InstanceMatrix instance_from_raw(const RawMatrix& a,
                                 double tol = tol::kRank);

}  // namespace maxdet

#endif  // MAXDET_CSV_HPP

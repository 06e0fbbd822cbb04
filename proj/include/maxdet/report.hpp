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

#ifndef MAXDET_REPORT_HPP
#define MAXDET_REPORT_HPP

#include <span>
#include <string>
#include <vector>

namespace maxdet {

// |ub - lb| / max(|ub|, |lb|, 1e-8).  Inputs must be finite.
double normalized_gap(double lb, double ub);

enum class LogBase { kTwo, kNatural };

// One benchmark line: bounds on the log-determinant of the best subset,
// in the base recorded by `log_base`.
struct ReportRow {
  std::string name;
  int n = 0;
  int r = 0;
  double lb = 0.0;
  bool lb_optimal = false;  // rendered as a "(*)" suffix on the bound
  double time_bnb_s = 0.0;
  double ub = 0.0;
  double time_lp_s = 0.0;
  double gap = 0.0;
  LogBase log_base = LogBase::kNatural;
};

// Fixed-width text table over the rows, one header line included.
std::string format_table(std::span<const ReportRow> rows);

}  // namespace maxdet

#endif  // MAXDET_REPORT_HPP

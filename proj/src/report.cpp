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

#include "maxdet/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace maxdet {

double normalized_gap(double lb, double ub) {
  const double scale = std::max({std::abs(ub), std::abs(lb), 1e-8});
  return std::abs(ub - lb) / scale;
}

std::string format_table(std::span<const ReportRow> rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-24s %5s %5s %14s %9s %14s %9s %7s %5s\n",
                "name", "n", "r", "LB", "t_bnb", "UB", "t_lp", "GAP", "log");
  out += line;
  for (const ReportRow& row : rows) {
    char lb_text[40];
    std::snprintf(lb_text, sizeof(lb_text), "%.6g%s", row.lb,
                  row.lb_optimal ? "(*)" : "");
    std::snprintf(line, sizeof(line),
                  "%-24s %5d %5d %14s %9.2f %14.6g %9.2f %7.2f %5s\n",
                  row.name.c_str(), row.n, row.r, lb_text, row.time_bnb_s,
                  row.ub, row.time_lp_s, row.gap,
                  row.log_base == LogBase::kTwo ? "2" : "e");
    out += line;
  }
  return out;
}

}  // namespace maxdet

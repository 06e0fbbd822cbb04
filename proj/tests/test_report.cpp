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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "maxdet/report.hpp"

using maxdet::ReportRow;

TEST_CASE("normalized gap") {
  SUBCASE("typical interval") {
    const double g = maxdet::normalized_gap(2.0, 4.3399);
    CHECK(g == doctest::Approx((4.3399 - 2.0) / 4.3399).epsilon(1e-12));
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", g);
    CHECK(std::string(buf) == "0.54");
  }

  SUBCASE("closed interval") {
    CHECK(maxdet::normalized_gap(3.25, 3.25) == 0.0);
    CHECK(maxdet::normalized_gap(-7.5, -7.5) == 0.0);
  }

  SUBCASE("degenerate zero interval") {
    CHECK(maxdet::normalized_gap(0.0, 0.0) == 0.0);
  }

  SUBCASE("tiny bounds are guarded") {
    const double g = maxdet::normalized_gap(0.0, 1e-12);
    CHECK(g == doctest::Approx(1e-12 / 1e-8));
  }

  SUBCASE("symmetry in the absolute difference") {
    std::mt19937_64 gen(5);
    std::normal_distribution<double> normal(0.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
      const double a = normal(gen);
      const double b = normal(gen);
      const double g = maxdet::normalized_gap(a, b);
      CHECK(g >= 0.0);
      CHECK(g == doctest::Approx(maxdet::normalized_gap(b, a)));
      const double expect =
          std::abs(b - a) / std::max({std::abs(a), std::abs(b), 1e-8});
      CHECK(g == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("rows carry recomputable gaps") {
  ReportRow row;
  row.name = "demo";
  row.n = 10;
  row.r = 5;
  row.lb = 2.0;
  row.ub = 4.3399;
  row.gap = maxdet::normalized_gap(row.lb, row.ub);
  CHECK(std::abs(row.gap - maxdet::normalized_gap(row.lb, row.ub)) <= 1e-12);
}

TEST_CASE("table rendering") {
  ReportRow done;
  done.name = "alpha";
  done.n = 12;
  done.r = 5;
  done.lb = 3.5;
  done.lb_optimal = true;
  done.time_bnb_s = 0.01;
  done.ub = 3.5;
  done.time_lp_s = 0.02;
  done.gap = 0.0;
  done.log_base = maxdet::LogBase::kTwo;

  ReportRow open = done;
  open.name = "beta";
  open.lb_optimal = false;
  open.ub = 4.25;
  open.gap = maxdet::normalized_gap(open.lb, open.ub);
  open.log_base = maxdet::LogBase::kNatural;

  const std::vector<ReportRow> rows{done, open};
  const std::string table = maxdet::format_table(rows);

  CHECK(table.find("alpha") != std::string::npos);
  CHECK(table.find("beta") != std::string::npos);
  CHECK(table.find("(*)") != std::string::npos);
  CHECK(table.find("LB") != std::string::npos);
  CHECK(table.find("UB") != std::string::npos);
  CHECK(table.find("GAP") != std::string::npos);

  // exactly one asterisk flag: the certified row
  std::size_t stars = 0;
  for (std::size_t pos = table.find("(*)"); pos != std::string::npos;
       pos = table.find("(*)", pos + 1))
    ++stars;
  CHECK(stars == 1);

  // one header plus two data lines
  std::size_t lines = 0;
  for (char c : table) lines += c == '\n';
  CHECK(lines >= 3);
}

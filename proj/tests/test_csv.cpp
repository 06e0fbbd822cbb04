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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "maxdet/csv.hpp"
#include "maxdet/errors.hpp"
#include "oracles.hpp"

using maxdet::RawMatrix;
using oracles::Mat2;

namespace {

namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << body;
  return p;
}

std::string csv_body(const Mat2& a) {
  std::string body;
  char buf[64];
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j]);
      body += buf;
      body += j + 1 < row.size() ? "," : "\n";
    }
  }
  return body;
}

RawMatrix parse(const std::string& name, const std::string& body,
                const maxdet::CsvOptions& opts = {}) {
  const fs::path p = write_temp(name, body);
  const RawMatrix m = maxdet::load_csv(p, opts);
  fs::remove(p);
  return m;
}

}  // namespace

TEST_CASE("plain numeric csv") {
  const RawMatrix m = parse("plain.csv", "1,2\n3,4\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m.values(0, 0) == 1.0);
  CHECK(m.values(0, 1) == 2.0);
  CHECK(m.values(1, 0) == 3.0);
  CHECK(m.values(1, 1) == 4.0);
  CHECK_FALSE(m.header_skipped);
}

TEST_CASE("header rows can be skipped") {
  maxdet::CsvOptions opts;
  opts.skip_header = true;
  const RawMatrix m = parse("header.csv", "a,b\n1,2\n", opts);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m.values(0, 0) == 1.0);
  CHECK(m.header_skipped);
}

TEST_CASE("tolerates blank lines, CRLF and scientific notation") {
  const RawMatrix m =
      parse("messy.csv", "\n1.5e2,-0.25\r\n\n2,3.75\r\n\n");
  CHECK(m.rows() == 2);
  CHECK(m.values(0, 0) == 150.0);
  CHECK(m.values(0, 1) == -0.25);
  CHECK(m.values(1, 1) == 3.75);
}

TEST_CASE("alternate delimiters") {
  maxdet::CsvOptions opts;
  opts.delimiter = ';';
  const RawMatrix m = parse("semi.csv", "1;2\n3;4\n", opts);
  CHECK(m.cols() == 2);
  CHECK(m.values(1, 0) == 3.0);
}

TEST_CASE("parse failures carry locations") {
  SUBCASE("ragged rows") {
    CHECK_THROWS_AS(parse("ragged.csv", "1,2\n3\n"), maxdet::RaggedRows);
  }

  SUBCASE("non-numeric field") {
    try {
      parse("alpha.csv", "1,2\n3,oops\n");
      FAIL("expected a parse failure");
    } catch (const maxdet::NonNumeric& e) {
      const std::string msg = e.what();
      CHECK(msg.find("row 2") != std::string::npos);
      CHECK(msg.find("column 2") != std::string::npos);
    }
  }

  SUBCASE("non-finite field") {
    CHECK_THROWS_AS(parse("inf.csv", "1,inf\n2,3\n"), maxdet::NonNumeric);
    CHECK_THROWS_AS(parse("nan.csv", "nan,1\n2,3\n"), maxdet::NonNumeric);
  }

  SUBCASE("empty file") {
    CHECK_THROWS_AS(parse("empty.csv", ""), maxdet::ParseError);
    CHECK_THROWS_AS(parse("blank.csv", "\n\n"), maxdet::ParseError);
  }

  SUBCASE("missing file") {
    CHECK_THROWS_AS(maxdet::load_csv(fs::temp_directory_path() / "nope.csv"),
                    maxdet::IoError);
  }
}

TEST_CASE("independent column extraction") {
  SUBCASE("identity columns all survive") {
    const RawMatrix m = parse("ident.csv", "1,0\n0,1\n0,0\n1,1\n");
    const auto v = maxdet::independent_columns(m);
    CHECK(v.n() == 4);
    CHECK(v.r() == 2);
  }

  SUBCASE("duplicate columns are dropped") {
    // third column duplicates the first
    const RawMatrix m = parse("dup.csv", "1,0,1\n0,1,0\n2,1,2\n5,0,5\n");
    const auto v = maxdet::independent_columns(m);
    CHECK(v.r() == 2);
    CHECK(v.n() == 4);
    // kept columns are the original first and second
    CHECK(v.row(3)[0] == 5.0);
    CHECK(v.row(3)[1] == 0.0);
  }

  SUBCASE("a summed column is dropped and rank matches elimination") {
    std::mt19937_64 gen(321);
    Mat2 a = oracles::gaussian(gen, 20, 6);
    for (std::size_t i = 0; i < 20; ++i) a[i][5] = a[i][0] + a[i][3];

    const RawMatrix m = parse("summed.csv", csv_body(a));
    const auto v = maxdet::independent_columns(m);
    CHECK(v.r() == 5);
    CHECK(v.r() == oracles::rank(a));
  }

  SUBCASE("zero matrices have no usable columns") {
    const RawMatrix m = parse("zero.csv", "0,0\n0,0\n0,0\n");
    CHECK_THROWS_AS(maxdet::independent_columns(m), maxdet::RankZero);
  }

  SUBCASE("as many kept columns as rows is rejected") {
    const RawMatrix m = parse("square.csv", "1,0\n0,1\n");
    CHECK_THROWS_AS(maxdet::independent_columns(m), maxdet::NotTall);
  }

  SUBCASE("idempotence") {
    std::mt19937_64 gen(17);
    Mat2 a = oracles::gaussian(gen, 12, 4);
    for (std::size_t i = 0; i < 12; ++i) a[i].push_back(a[i][1] - a[i][2]);

    const RawMatrix m = parse("idem.csv", csv_body(a));
    const auto v1 = maxdet::independent_columns(m);

    RawMatrix again;
    again.values = v1.data();
    again.source = "memory";
    const auto v2 = maxdet::independent_columns(again);
    CHECK(v2.n() == v1.n());
    CHECK(v2.r() == v1.r());
    CHECK(v2.data() == v1.data());
  }
}

TEST_CASE("ingestion accepts square full-rank data directly") {
  // a 3x3 incidence matrix: square, full rank, no extraction possible
  const RawMatrix m = parse("tri.csv", "1,1,0\n1,0,1\n0,1,1\n");
  const auto v = maxdet::instance_from_raw(m);
  CHECK(v.n() == 3);
  CHECK(v.r() == 3);

  // rank-deficient wide-ish data falls back to column extraction
  const RawMatrix d = parse("fall.csv", "1,0,1\n0,1,0\n2,1,2\n5,0,5\n");
  const auto w = maxdet::instance_from_raw(d);
  CHECK(w.r() == 2);
  CHECK(w.n() == 4);
}

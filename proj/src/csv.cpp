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

#include "maxdet/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "maxdet/errors.hpp"

namespace maxdet {

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

RawMatrix load_csv(const std::filesystem::path& path,
                   const CsvOptions& options) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string() + " for reading");

  std::vector<std::vector<double>> data;
  std::string line;
  int line_no = 0;
  bool header_pending = options.skip_header;
  bool header_skipped = false;
  int width = -1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    if (header_pending) {
      header_pending = false;
      header_skipped = true;
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t end = line.find(options.delimiter, start);
      const std::string_view field = trimmed(
          std::string_view(line).substr(start, end == std::string::npos
                                                   ? std::string::npos
                                                   : end - start));
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size() ||
          !std::isfinite(value))
        throw NonNumeric("field \"" + std::string(field) +
                             "\" is not a finite number",
                         "row " + std::to_string(line_no) + ", column " +
                             std::to_string(row.size() + 1));
      row.push_back(value);
      if (end == std::string::npos) break;
      start = end + 1;
    }
    if (width < 0)
      width = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != width)
      throw RaggedRows("expected " + std::to_string(width) +
                           " fields, found " + std::to_string(row.size()),
                       "row " + std::to_string(line_no));
    data.push_back(std::move(row));
  }
  if (data.empty())
    throw ParseError("no data rows in " + path.string());

  RawMatrix out;
  out.values = Matrix(static_cast<int>(data.size()), width);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < width; ++j) out.values(i, j) = data[i][j];
  out.source = path.string();
  out.header_skipped = header_skipped;
  return out;
}

InstanceMatrix independent_columns(const RawMatrix& a, double tol) {
  std::vector<int> kept = pivoted_column_basis(a.values, tol);
  if (kept.empty()) throw RankZero("no column has a nonzero residual");
  if (static_cast<int>(kept.size()) >= a.rows())
    throw NotTall("kept " + std::to_string(kept.size()) +
                  " columns but the data has only " +
                  std::to_string(a.rows()) + " rows");
  std::sort(kept.begin(), kept.end());
  Matrix v(a.rows(), static_cast<int>(kept.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < static_cast<int>(kept.size()); ++j)
      v(i, j) = a.values(i, kept[j]);
  return InstanceMatrix(std::move(v));
}

InstanceMatrix instance_from_raw(const RawMatrix& a, double tol) {
  if (a.rows() >= a.cols()) {
    try {
      return InstanceMatrix(a.values);
    } catch (const RankDeficient&) {
      // fall through to extraction
    }
  }
  return independent_columns(a, tol);
}

}  // namespace maxdet

// Copyright 2026 The touchboard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <touchboard/csv.hpp>

#include <touchboard/errors.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace touchboard {

std::vector<csv_row> parse_csv(std::istream& in)
{
  std::vector<csv_row> rows;
  csv_row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&]() {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&]() {
    if (field_started || !row.empty()) {
      end_field();
    }
    const bool blank = row.empty() || (row.size() == 1 && row.front().empty());
    if (!blank) {
      rows.push_back(std::move(row));
    }
    row.clear();
  };

  char c = 0;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') {
          ++line;
        }
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw csv_error(line, "quote inside an unquoted field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        field_started = true;
        end_field();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
        break;
    }
  }
  if (in_quotes) {
    throw csv_error(record_line, "unterminated quoted field");
  }
  end_record();
  return rows;
}

std::vector<csv_row> parse_csv(std::string_view text)
{
  std::istringstream in{ std::string(text) };
  return parse_csv(in);
}

std::string csv_escape(std::string_view field)
{
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') {
      out.push_back('"');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

namespace {

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& cell, std::size_t line)
{
  const auto t = trim(cell);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw csv_error(line, "'" + cell + "' is not a number");
  }
  return v;
}

std::string lower(std::string s)
{
  for (auto& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::int64_t to_count(const std::string& cell, std::size_t line)
{
  const auto t = trim(cell);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw csv_error(line, "'" + cell + "' is not an integer");
  }
  if (v < 0) {
    throw csv_error(line, "frequency " + cell + " is negative");
  }
  return v;
}

}  // namespace

evalstats::task_matrix read_task_matrix(std::istream& in)
{
  const auto rows = parse_csv(in);
  if (rows.empty()) {
    throw csv_error(1, "missing header row");
  }
  const auto& header = rows.front();
  if (header.size() < 2) {
    throw csv_error(1, "header needs a task column and at least one participant");
  }
  evalstats::task_matrix m;
  m.participants.assign(header.begin() + 1, header.end());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw csv_error(r + 1, "expected " + std::to_string(header.size()) +
                               " fields, got " + std::to_string(row.size()));
    }
    m.tasks.push_back(row.front());
    std::vector<double> values;
    for (std::size_t c = 1; c < row.size(); ++c) {
      values.push_back(to_double(row[c], r + 1));
    }
    m.values.push_back(std::move(values));
  }
  return m;
}

evalstats::survey_table read_survey_table(std::istream& in, std::string name)
{
  const auto rows = parse_csv(in);
  if (rows.empty()) {
    throw csv_error(1, "missing header row");
  }
  const auto& header = rows.front();
  if (header.size() != 4 || lower(trim(header[1])) != "no" ||
      lower(trim(header[2])) != "partly" || lower(trim(header[3])) != "yes") {
    throw csv_error(1, "survey header must be label,no,partly,yes");
  }
  evalstats::survey_table table;
  table.name = std::move(name);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 4) {
      throw csv_error(r + 1, "expected 4 fields, got " + std::to_string(row.size()));
    }
    table.items.push_back(
      { row[0], to_count(row[1], r + 1), to_count(row[2], r + 1), to_count(row[3], r + 1) });
  }
  return table;
}

evalstats::discovery_matrix read_discovery_matrix(std::istream& in)
{
  const auto rows = parse_csv(in);
  if (rows.empty()) {
    throw csv_error(1, "discovery matrix has no rows");
  }
  std::vector<std::vector<bool>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw csv_error(r + 1, "ragged discovery row");
    }
    std::vector<bool> row;
    for (const auto& cell : rows[r]) {
      const auto t = trim(cell);
      if (t != "0" && t != "1") {
        throw csv_error(r + 1, "discovery cells must be 0 or 1, got '" + cell + "'");
      }
      row.push_back(t == "1");
    }
    cells.push_back(std::move(row));
  }
  return evalstats::discovery_matrix(cells);
}

}  // namespace touchboard

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


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace touchboard {

/// Root of every error the simulator and statistics code raise.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// touch_path
class malformed_transaction : public error
{
public:
  using error::error;
};

// coord_store
class stale_sample : public error
{
public:
  using error::error;
};

// render
class pen_up_error : public error
{
public:
  using error::error;
};

// video_out
class dimension_mismatch : public error
{
public:
  using error::error;
};

// sevenseg
class digit_out_of_range : public error
{
public:
  using error::error;
};

// device / trace files
class trace_order_error : public error
{
public:
  using error::error;
};

class trace_parse_error : public error
{
public:
  trace_parse_error(std::size_t line, const std::string& what)
    : error("line " + std::to_string(line) + ": " + what)
    , m_line(line)
  {
  }

  [[nodiscard]] std::size_t line() const noexcept { return m_line; }

private:
  std::size_t m_line;
};

// evalstats
class empty_matrix : public error
{
public:
  using error::error;
};

/// Ragged grid, non-positive task time, or similar structural defect.
class malformed_matrix : public error
{
public:
  using error::error;
};

class out_of_scale : public error
{
public:
  using error::error;
};

class row_sum_mismatch : public error
{
public:
  using error::error;
};

class bad_group_size : public error
{
public:
  using error::error;
};

/// Raised by the CSV readers for structurally broken input.
class csv_error : public error
{
public:
  csv_error(std::size_t line, const std::string& what)
    : error("csv line " + std::to_string(line) + ": " + what)
    , m_line(line)
  {
  }

  [[nodiscard]] std::size_t line() const noexcept { return m_line; }

private:
  std::size_t m_line;
};

}  // namespace touchboard

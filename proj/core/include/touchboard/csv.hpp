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

#include <touchboard/evalstats.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace touchboard {

using csv_row = std::vector<std::string>;

/// Comma-separated records with RFC 4180 quoting. Blank lines are skipped.
/// Throws csv_error on an unterminated quote.
[[nodiscard]] std::vector<csv_row> parse_csv(std::istream& in);
[[nodiscard]] std::vector<csv_row> parse_csv(std::string_view text);

/// Quotes a field only when it needs it.
[[nodiscard]] std::string csv_escape(std::string_view field);

/// Header "task,<participant>...", then one row per task. Throws csv_error
/// for ragged rows or non-numeric cells.
[[nodiscard]] evalstats::task_matrix read_task_matrix(std::istream& in);

/// Header "label,no,partly,yes", then one row per item.
[[nodiscard]] evalstats::survey_table read_survey_table(std::istream& in,
                                                        std::string name);

/// One row per user, one 0/1 column per problem, no header.
[[nodiscard]] evalstats::discovery_matrix read_discovery_matrix(std::istream& in);

}  // namespace touchboard

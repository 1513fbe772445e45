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

#include <array>
#include <optional>
#include <string_view>

namespace touchboard::fixtures {

// Transcriptions of the usability study's raw data, compiled in from
// core/fixtures/*.csv so the CLI works without the source tree.

enum class survey_factor : std::uint8_t
{
  subservientness,
  user_friendliness,
  usability,
};

inline constexpr std::array<survey_factor, 3> all_factors{
  survey_factor::subservientness,
  survey_factor::user_friendliness,
  survey_factor::usability,
};

[[nodiscard]] std::string_view to_string(survey_factor f);
[[nodiscard]] std::optional<survey_factor> parse_survey_factor(std::string_view text);

[[nodiscard]] std::string_view task_times_csv();
[[nodiscard]] std::string_view task_difficulty_csv();
[[nodiscard]] std::string_view survey_csv(survey_factor f);
/// The eight-task usability script as a device trace.
[[nodiscard]] std::string_view tasks8_trace();

/// 8 tasks x 20 participants, seconds.
[[nodiscard]] evalstats::task_matrix task_times();
/// 8 tasks x 20 participants, ratings 1..5.
[[nodiscard]] evalstats::task_matrix task_difficulty();
[[nodiscard]] evalstats::survey_table survey(survey_factor f);

}  // namespace touchboard::fixtures

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


#include <touchboard/fixtures.hpp>

#include <touchboard/csv.hpp>

#include "fixtures_data.hpp"

#include <sstream>
#include <string>

namespace touchboard::fixtures {

std::string_view to_string(survey_factor f)
{
  switch (f) {
    case survey_factor::subservientness:
      return "subservientness";
    case survey_factor::user_friendliness:
      return "user-friendliness";
    case survey_factor::usability:
      return "usability";
  }
  return "unknown";
}

std::optional<survey_factor> parse_survey_factor(std::string_view text)
{
  for (const auto f : all_factors) {
    if (to_string(f) == text) {
      return f;
    }
  }
  if (text == "user_friendliness") {
    return survey_factor::user_friendliness;
  }
  return std::nullopt;
}

std::string_view task_times_csv()
{
  return embedded::task_times;
}

std::string_view task_difficulty_csv()
{
  return embedded::task_difficulty;
}

std::string_view survey_csv(survey_factor f)
{
  switch (f) {
    case survey_factor::subservientness:
      return embedded::survey_subservientness;
    case survey_factor::user_friendliness:
      return embedded::survey_user_friendliness;
    case survey_factor::usability:
      return embedded::survey_usability;
  }
  return {};
}

std::string_view tasks8_trace()
{
  return embedded::tasks8;
}

namespace {

evalstats::task_matrix load_matrix(std::string_view text)
{
  std::istringstream in{ std::string(text) };
  return read_task_matrix(in);
}

}  // namespace

evalstats::task_matrix task_times()
{
  return load_matrix(task_times_csv());
}

evalstats::task_matrix task_difficulty()
{
  return load_matrix(task_difficulty_csv());
}

evalstats::survey_table survey(survey_factor f)
{
  std::istringstream in{ std::string(survey_csv(f)) };
  return read_survey_table(in, std::string(to_string(f)));
}

}  // namespace touchboard::fixtures

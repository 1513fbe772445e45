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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace touchboard::report {

enum class format : std::uint8_t
{
  text,
  csv,
};

/// "%.*f" of the half-up rounded value.
[[nodiscard]] std::string fixed(double value, int decimals);

[[nodiscard]] std::string means(std::string_view title,
                                const evalstats::task_matrix& m,
                                const evalstats::mean_report& r,
                                format fmt);

[[nodiscard]] std::string survey(const evalstats::survey_report& r, format fmt);

struct resample_row
{
  std::size_t k = 0;
  evalstats::resample_stats stats;
};

[[nodiscard]] std::string resample(const std::vector<resample_row>& rows,
                                   std::size_t users,
                                   std::size_t trials,
                                   std::uint64_t seed,
                                   format fmt);

}  // namespace touchboard::report

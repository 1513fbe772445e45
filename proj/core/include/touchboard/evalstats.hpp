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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace touchboard::evalstats {

/// Rounds half away from zero at `decimals` places, as the printed tables
/// do. Values within 1e-9 of a half step count as the half step so binary
/// noise in e.g. 2.445 does not round the wrong way.
[[nodiscard]] double round_half_up(double value, int decimals = 2);

/// Tasks by participants. Values are seconds for completion times or 1..5
/// for difficulty ratings.
struct task_matrix
{
  std::vector<std::string> tasks;
  std::vector<std::string> participants;
  std::vector<std::vector<double>> values;  // [task][participant]
};

struct mean_report
{
  std::vector<double> per_task;
  double overall = 0.0;
};

/// Row means and the grand mean over every cell. Throws empty_matrix when
/// there are no cells, malformed_matrix for ragged rows or times <= 0.
[[nodiscard]] mean_report task_means(const task_matrix& m);

/// As task_means, but throws out_of_scale unless every value is an integer
/// in 1..5.
[[nodiscard]] mean_report difficulty_means(const task_matrix& m);

enum class likert_band : std::uint8_t
{
  no,
  partly,
  yes,
};

[[nodiscard]] std::string_view to_string(likert_band band);

struct band_range
{
  likert_band band;
  double lo;
  double hi;
};

inline constexpr std::array<band_range, 3> likert_bands{ {
  { likert_band::no, 1.00, 1.66 },
  { likert_band::partly, 1.67, 2.33 },
  { likert_band::yes, 2.34, 3.00 },
} };

/// Rounds to two decimals, then looks the value up in likert_bands. Throws
/// std::out_of_range outside 1.00..3.00.
[[nodiscard]] likert_band classify_band(double mean);

struct survey_item
{
  std::string label;
  std::int64_t f_no = 0;
  std::int64_t f_partly = 0;
  std::int64_t f_yes = 0;
};

struct survey_table
{
  std::string name;
  std::vector<survey_item> items;
};

struct survey_item_stats
{
  std::string label;
  std::array<std::int64_t, 3> f{};  // no, partly, yes
  std::array<double, 3> pct{};
  double mean = 0.0;
  /// Population standard deviation of the 1/2/3 reply codes.
  double stddev = 0.0;
};

struct survey_report
{
  std::string name;
  std::int64_t participants = 0;
  std::vector<survey_item_stats> items;
  std::array<double, 3> overall_f{};
  std::array<double, 3> overall_pct{};
  double overall_mean = 0.0;
  likert_band band = likert_band::no;
};

/// Per-item frequency, percentage, mean (1 = No, 2 = Partly, 3 = Yes) and
/// the factor's overall row (column means). `participants` defaults to the
/// first item's reply count; every item must sum to it or row_sum_mismatch
/// is thrown.
[[nodiscard]] survey_report survey_stats(
  const survey_table& table,
  std::optional<std::int64_t> participants = std::nullopt);

/// Per-evaluator probability of finding a given problem, in (0, 1].
class discovery_model
{
public:
  /// Throws std::invalid_argument outside (0, 1].
  explicit discovery_model(double lambda);

  [[nodiscard]] double lambda() const noexcept { return m_lambda; }

private:
  double m_lambda;
};

/// Expected share of problems found by n evaluators: 1 - (1 - lambda)^n.
[[nodiscard]] double discovery_proportion(const discovery_model& model,
                                          std::uint64_t n);

/// (1 - lambda)^n, the share still undiscovered.
[[nodiscard]] double miss_proportion(const discovery_model& model,
                                     std::uint64_t n);

/// lambda such that n evaluators find `target_p` of the problems. Throws
/// std::invalid_argument unless 0 < target_p < 1 and n >= 1.
[[nodiscard]] double solve_lambda(double target_p, std::uint64_t n);

/// Users by problems; true where the user reported the problem.
class discovery_matrix
{
public:
  discovery_matrix(std::size_t users, std::size_t problems);
  explicit discovery_matrix(const std::vector<std::vector<bool>>& rows);

  [[nodiscard]] std::size_t users() const noexcept { return m_users; }
  [[nodiscard]] std::size_t problems() const noexcept { return m_problems; }
  [[nodiscard]] bool found(std::size_t user, std::size_t problem) const;
  void set(std::size_t user, std::size_t problem, bool value);

  /// Problems reported by at least one user of the full group.
  [[nodiscard]] std::vector<std::size_t> known_problems() const;

  /// Share (in percent) of known_problems() that `group` found. An empty
  /// known set counts as fully covered.
  [[nodiscard]] double coverage_percent(const std::vector<std::size_t>& group) const;

private:
  std::size_t m_users;
  std::size_t m_problems;
  std::vector<std::uint8_t> m_cells;
};

/// Each cell true with probability `hit_probability`, reproducible from
/// `seed`.
[[nodiscard]] discovery_matrix synthetic_discovery_matrix(std::size_t users,
                                                          std::size_t problems,
                                                          double hit_probability,
                                                          std::uint64_t seed);

struct resample_stats
{
  double min_pct = 0.0;
  double mean_pct = 0.0;
  double std_pct = 0.0;  // population standard deviation over trials
};

/// Draws `trials` random subgroups of `k` users (without replacement) and
/// summarizes how much of the full group's problem set each one finds.
/// Trial i uses its own generator seeded from (seed, i), so the result does
/// not depend on evaluation order. Throws bad_group_size unless
/// 1 <= k <= users and trials >= 1.
[[nodiscard]] resample_stats subgroup_resample(const discovery_matrix& d,
                                               std::size_t k,
                                               std::size_t trials,
                                               std::uint64_t seed);

/// The k users drawn for trial `trial`, exposed for reproducibility checks.
[[nodiscard]] std::vector<std::size_t> draw_subgroup(std::size_t users,
                                                     std::size_t k,
                                                     std::uint64_t seed,
                                                     std::uint64_t trial);

}  // namespace touchboard::evalstats

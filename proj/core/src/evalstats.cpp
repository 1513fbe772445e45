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


#include <touchboard/evalstats.hpp>

#include <touchboard/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace touchboard::evalstats {

double round_half_up(double value, int decimals)
{
  const double scale = std::pow(10.0, decimals);
  const double magnitude = std::floor(std::abs(value) * scale + 0.5 + 1e-9) / scale;
  return std::copysign(magnitude, value);
}

namespace {

mean_report means_of(const task_matrix& m)
{
  if (m.values.empty()) {
    throw empty_matrix("task matrix has no tasks");
  }
  const auto width = m.values.front().size();
  if (width == 0) {
    throw empty_matrix("task matrix has no participants");
  }
  if (!m.tasks.empty() && m.tasks.size() != m.values.size()) {
    throw malformed_matrix("task label count differs from row count");
  }
  if (!m.participants.empty() && m.participants.size() != width) {
    throw malformed_matrix("participant label count differs from column count");
  }
  mean_report out;
  double grand = 0.0;
  for (std::size_t t = 0; t < m.values.size(); ++t) {
    const auto& row = m.values[t];
    if (row.size() != width) {
      throw malformed_matrix("row " + std::to_string(t + 1) + " has " +
                             std::to_string(row.size()) + " values, expected " +
                             std::to_string(width));
    }
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    out.per_task.push_back(sum / static_cast<double>(width));
    grand += sum;
  }
  out.overall = grand / static_cast<double>(width * m.values.size());
  return out;
}

}  // namespace

mean_report task_means(const task_matrix& m)
{
  auto report = means_of(m);
  for (const auto& row : m.values) {
    for (const double v : row) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw malformed_matrix("task times must be positive, got " + std::to_string(v));
      }
    }
  }
  return report;
}

mean_report difficulty_means(const task_matrix& m)
{
  auto report = means_of(m);
  for (const auto& row : m.values) {
    for (const double v : row) {
      if (v < 1.0 || v > 5.0 || std::floor(v) != v) {
        throw out_of_scale("difficulty rating " + std::to_string(v) +
                           " is not one of 1..5");
      }
    }
  }
  return report;
}

std::string_view to_string(likert_band band)
{
  switch (band) {
    case likert_band::no:
      return "No";
    case likert_band::partly:
      return "Partly";
    case likert_band::yes:
      return "Yes";
  }
  return "unknown";
}

likert_band classify_band(double mean)
{
  const double rounded = round_half_up(mean, 2);
  for (const auto& range : likert_bands) {
    // Compare in hundredths so 1.67 and friends are exact.
    const auto v = std::llround(rounded * 100.0);
    if (v >= std::llround(range.lo * 100.0) && v <= std::llround(range.hi * 100.0)) {
      return range.band;
    }
  }
  throw std::out_of_range("mean " + std::to_string(mean) + " outside 1.00..3.00");
}

survey_report survey_stats(const survey_table& table,
                           std::optional<std::int64_t> participants)
{
  if (table.items.empty()) {
    throw empty_matrix("survey table '" + table.name + "' has no items");
  }
  const auto& first = table.items.front();
  const std::int64_t p = participants.value_or(first.f_no + first.f_partly + first.f_yes);
  if (p <= 0) {
    throw row_sum_mismatch("survey table '" + table.name + "' has no replies");
  }

  survey_report report;
  report.name = table.name;
  report.participants = p;
  const double pd = static_cast<double>(p);
  double mean_sum = 0.0;
  for (std::size_t i = 0; i < table.items.size(); ++i) {
    const auto& item = table.items[i];
    if (item.f_no < 0 || item.f_partly < 0 || item.f_yes < 0) {
      throw row_sum_mismatch("item " + std::to_string(i + 1) + " has a negative frequency");
    }
    const auto total = item.f_no + item.f_partly + item.f_yes;
    if (total != p) {
      throw row_sum_mismatch("item " + std::to_string(i + 1) + " sums to " +
                             std::to_string(total) + ", expected " + std::to_string(p));
    }
    survey_item_stats s;
    s.label = item.label;
    s.f = { item.f_no, item.f_partly, item.f_yes };
    double weighted = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
      s.pct[c] = 100.0 * static_cast<double>(s.f[c]) / pd;
      weighted += static_cast<double>(c + 1) * static_cast<double>(s.f[c]);
      report.overall_f[c] += static_cast<double>(s.f[c]);
    }
    s.mean = weighted / pd;
    double var = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
      const double d = static_cast<double>(c + 1) - s.mean;
      var += static_cast<double>(s.f[c]) * d * d;
    }
    s.stddev = std::sqrt(var / pd);
    mean_sum += s.mean;
    report.items.push_back(std::move(s));
  }
  const double n_items = static_cast<double>(table.items.size());
  for (std::size_t c = 0; c < 3; ++c) {
    report.overall_f[c] /= n_items;
    report.overall_pct[c] = 100.0 * report.overall_f[c] / pd;
  }
  report.overall_mean = mean_sum / n_items;
  report.band = classify_band(report.overall_mean);
  return report;
}

discovery_model::discovery_model(double lambda)
  : m_lambda(lambda)
{
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("discovery rate must lie in (0, 1], got " +
                                std::to_string(lambda));
  }
}

double miss_proportion(const discovery_model& model, std::uint64_t n)
{
  if (n == 0) {
    return 1.0;
  }
  if (model.lambda() == 1.0) {
    return 0.0;
  }
  return std::exp(static_cast<double>(n) * std::log1p(-model.lambda()));
}

double discovery_proportion(const discovery_model& model, std::uint64_t n)
{
  if (n == 0) {
    return 0.0;
  }
  if (model.lambda() == 1.0) {
    return 1.0;
  }
  return -std::expm1(static_cast<double>(n) * std::log1p(-model.lambda()));
}

double solve_lambda(double target_p, std::uint64_t n)
{
  if (!(target_p > 0.0 && target_p < 1.0)) {
    throw std::invalid_argument("target proportion must lie in (0, 1)");
  }
  if (n == 0) {
    throw std::invalid_argument("evaluator count must be at least 1");
  }
  return -std::expm1(std::log1p(-target_p) / static_cast<double>(n));
}

discovery_matrix::discovery_matrix(std::size_t users, std::size_t problems)
  : m_users(users)
  , m_problems(problems)
  , m_cells(users * problems, 0)
{
  if (users == 0) {
    throw bad_group_size("discovery matrix needs at least one user");
  }
}

discovery_matrix::discovery_matrix(const std::vector<std::vector<bool>>& rows)
  : discovery_matrix(rows.size(), rows.empty() ? 0 : rows.front().size())
{
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u].size() != m_problems) {
      throw malformed_matrix("discovery row " + std::to_string(u + 1) +
                             " has the wrong number of problems");
    }
    for (std::size_t p = 0; p < m_problems; ++p) {
      set(u, p, rows[u][p]);
    }
  }
}

bool discovery_matrix::found(std::size_t user, std::size_t problem) const
{
  if (user >= m_users || problem >= m_problems) {
    throw std::out_of_range("discovery matrix index out of range");
  }
  return m_cells[user * m_problems + problem] != 0;
}

void discovery_matrix::set(std::size_t user, std::size_t problem, bool value)
{
  if (user >= m_users || problem >= m_problems) {
    throw std::out_of_range("discovery matrix index out of range");
  }
  m_cells[user * m_problems + problem] = value ? 1 : 0;
}

std::vector<std::size_t> discovery_matrix::known_problems() const
{
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < m_problems; ++p) {
    for (std::size_t u = 0; u < m_users; ++u) {
      if (m_cells[u * m_problems + p] != 0) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

double discovery_matrix::coverage_percent(const std::vector<std::size_t>& group) const
{
  const auto known = known_problems();
  if (known.empty()) {
    return 100.0;
  }
  std::size_t hits = 0;
  for (const auto p : known) {
    for (const auto u : group) {
      if (found(u, p)) {
        ++hits;
        break;
      }
    }
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(known.size());
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream)
{
  std::seed_seq seq{ static_cast<std::uint32_t>(seed),
                     static_cast<std::uint32_t>(seed >> 32U),
                     static_cast<std::uint32_t>(stream),
                     static_cast<std::uint32_t>(stream >> 32U) };
  return std::mt19937_64(seq);
}

// Unbiased draw in [0, n); the standard distributions are not bit-identical
// across library implementations.
std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t n)
{
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n);
  std::uint64_t r = 0;
  do {
    r = engine();
  } while (r >= limit);
  return r % n;
}

double unit_interval(std::mt19937_64& engine)
{
  return static_cast<double>(engine() >> 11U) * 0x1.0p-53;
}

}  // namespace

discovery_matrix synthetic_discovery_matrix(std::size_t users,
                                            std::size_t problems,
                                            double hit_probability,
                                            std::uint64_t seed)
{
  if (!(hit_probability >= 0.0 && hit_probability <= 1.0)) {
    throw std::invalid_argument("hit probability must lie in [0, 1]");
  }
  discovery_matrix d(users, problems);
  auto engine = make_engine(seed, std::numeric_limits<std::uint64_t>::max());
  for (std::size_t u = 0; u < users; ++u) {
    for (std::size_t p = 0; p < problems; ++p) {
      d.set(u, p, unit_interval(engine) < hit_probability);
    }
  }
  return d;
}

std::vector<std::size_t> draw_subgroup(std::size_t users,
                                       std::size_t k,
                                       std::uint64_t seed,
                                       std::uint64_t trial)
{
  if (k == 0 || k > users) {
    throw bad_group_size("group size " + std::to_string(k) + " not in 1.." +
                         std::to_string(users));
  }
  std::vector<std::size_t> pool(users);
  std::iota(pool.begin(), pool.end(), std::size_t{ 0 });
  auto engine = make_engine(seed, trial);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + bounded(engine, users - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

resample_stats subgroup_resample(const discovery_matrix& d,
                                 std::size_t k,
                                 std::size_t trials,
                                 std::uint64_t seed)
{
  if (k == 0 || k > d.users()) {
    throw bad_group_size("group size " + std::to_string(k) + " not in 1.." +
                         std::to_string(d.users()));
  }
  if (trials == 0) {
    throw bad_group_size("at least one trial is required");
  }
  std::vector<double> pcts(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    pcts[t] = d.coverage_percent(draw_subgroup(d.users(), k, seed, t));
  }
  resample_stats out;
  out.min_pct = *std::min_element(pcts.begin(), pcts.end());
  const double n = static_cast<double>(trials);
  out.mean_pct = std::accumulate(pcts.begin(), pcts.end(), 0.0) / n;
  double var = 0.0;
  for (const double p : pcts) {
    var += (p - out.mean_pct) * (p - out.mean_pct);
  }
  out.std_pct = std::sqrt(var / n);
  return out;
}

}  // namespace touchboard::evalstats

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


#include <touchboard/report.hpp>

#include <touchboard/csv.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace touchboard::report {

std::string fixed(double value, int decimals)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals,
                evalstats::round_half_up(value, decimals));
  return buf;
}

namespace {

std::string raw(double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace

std::string means(std::string_view title,
                  const evalstats::task_matrix& m,
                  const evalstats::mean_report& r,
                  format fmt)
{
  std::ostringstream os;
  if (fmt == format::csv) {
    os << "task,mean,mean_raw\n";
    for (std::size_t t = 0; t < r.per_task.size(); ++t) {
      const auto label = t < m.tasks.size() ? m.tasks[t] : std::to_string(t + 1);
      os << csv_escape(label) << ',' << fixed(r.per_task[t], 2) << ','
         << raw(r.per_task[t]) << '\n';
    }
    os << "overall," << fixed(r.overall, 2) << ',' << raw(r.overall) << '\n';
    return os.str();
  }
  os << title << '\n';
  for (std::size_t t = 0; t < r.per_task.size(); ++t) {
    const auto label = t < m.tasks.size() ? m.tasks[t] : std::to_string(t + 1);
    os << "  " << fixed(r.per_task[t], 2) << "  " << label << '\n';
  }
  os << "overall mean: " << fixed(r.overall, 2) << " (" << raw(r.overall) << ")\n";
  return os.str();
}

std::string survey(const evalstats::survey_report& r, format fmt)
{
  std::ostringstream os;
  if (fmt == format::csv) {
    os << "item,f_no,pct_no,f_partly,pct_partly,f_yes,pct_yes,mean,sd\n";
    for (const auto& item : r.items) {
      os << csv_escape(item.label);
      for (std::size_t c = 0; c < 3; ++c) {
        os << ',' << item.f[c] << ',' << fixed(item.pct[c], 2);
      }
      os << ',' << fixed(item.mean, 2) << ',' << fixed(item.stddev, 2) << '\n';
    }
    os << "overall";
    for (std::size_t c = 0; c < 3; ++c) {
      os << ',' << fixed(r.overall_f[c], 2) << ',' << fixed(r.overall_pct[c], 2);
    }
    os << ',' << fixed(r.overall_mean, 2) << ",\n";
    os << "band," << evalstats::to_string(r.band) << '\n';
    return os.str();
  }
  os << "factor: " << r.name << " (P = " << r.participants << ")\n";
  os << "  no f/%      partly f/%  yes f/%     mean  sd    item\n";
  auto cell = [](const std::string& f, const std::string& pct) {
    std::string s = f + "/" + pct;
    s.resize(std::max<std::size_t>(s.size(), 11), ' ');
    return s + ' ';
  };
  for (const auto& item : r.items) {
    os << "  ";
    for (std::size_t c = 0; c < 3; ++c) {
      os << cell(std::to_string(item.f[c]), fixed(item.pct[c], 0));
    }
    os << fixed(item.mean, 2) << "  " << fixed(item.stddev, 2) << "  " << item.label
       << '\n';
  }
  os << "  ";
  for (std::size_t c = 0; c < 3; ++c) {
    os << cell(fixed(r.overall_f[c], 1), fixed(r.overall_pct[c], 0));
  }
  os << fixed(r.overall_mean, 2) << "        overall\n";
  os << "overall mean: " << fixed(r.overall_mean, 2) << " band: "
     << evalstats::to_string(r.band) << '\n';
  return os.str();
}

std::string resample(const std::vector<resample_row>& rows,
                     std::size_t users,
                     std::size_t trials,
                     std::uint64_t seed,
                     format fmt)
{
  std::ostringstream os;
  if (fmt == format::csv) {
    os << "k,min_pct,mean_pct,std_pct\n";
    for (const auto& row : rows) {
      os << row.k << ',' << fixed(row.stats.min_pct, 2) << ','
         << fixed(row.stats.mean_pct, 2) << ',' << fixed(row.stats.std_pct, 2) << '\n';
    }
    return os.str();
  }
  os << "subgroup resampling: " << users << " users, " << trials
     << " trials per group size, seed " << seed << '\n';
  os << "  k     min %    mean %   std %\n";
  for (const auto& row : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-4zu  %7s  %7s  %6s\n", row.k,
                  fixed(row.stats.min_pct, 2).c_str(),
                  fixed(row.stats.mean_pct, 2).c_str(),
                  fixed(row.stats.std_pct, 2).c_str());
    os << line;
  }
  return os.str();
}

}  // namespace touchboard::report

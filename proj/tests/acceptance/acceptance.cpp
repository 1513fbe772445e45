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


// Acceptance runner: one PASS/FAIL line per release criterion. Exit status is
// the number of failing criteria (0 when everything holds).

#include "../../tools/cli.hpp"

#include <touchboard/csv.hpp>
#include <touchboard/device.hpp>
#include <touchboard/evalstats.hpp>
#include <touchboard/fixtures.hpp>
#include <touchboard/hash.hpp>
#include <touchboard/render.hpp>
#include <touchboard/touch_path.hpp>
#include <touchboard/trace.hpp>
#include <touchboard/video_out.hpp>

#include <published_values.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace touchboard;
namespace es = touchboard::evalstats;

namespace {

// Pinned tolerances and budgets.
constexpr double mean_tol = 0.005;
constexpr double difficulty_overall_tol = 0.02;
constexpr double lambda_tol = 1e-5;
constexpr double proportion_tol = 1e-4;
constexpr double refresh_tol = 0.01;
constexpr double times_budget_s = 1.0;
constexpr double spi_budget_s = 1.0;
constexpr double vga_budget_s = 5.0;

constexpr std::uint64_t property_seed = 20261016;

struct verdict
{
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      if (!pass) {
        detail << "; ";
      }
      pass = false;
      detail << what;
    }
  }
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string num(double v, int prec = 6)
{
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

bool within(double value, double target, double tol)
{
  return std::abs(value - target) <= tol;
}

// Runs the CLI and returns the "mean_raw" column of its CSV output.
std::vector<double> cli_raw_means(const std::string& what, verdict& v)
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({ "evalstats", what, "--fixtures", "--format", "csv" }, out, err);
  v.require(code == cli::exit_ok, "cli exit " + std::to_string(code) + ": " + err.str());
  std::vector<double> raw;
  const auto rows = parse_csv(out.str());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    raw.push_back(std::stod(rows[i].at(2)));
  }
  return raw;
}

verdict task_times()
{
  verdict v;
  const auto t0 = clock_type::now();
  const auto raw = cli_raw_means("times", v);
  const double elapsed = seconds_since(t0);
  v.require(raw.size() == 9, "expected 8 tasks + overall, got " + std::to_string(raw.size()));
  if (raw.size() == 9) {
    for (std::size_t t = 0; t < 8; ++t) {
      v.require(within(raw[t], published::task_time_means[t], mean_tol),
                "task " + std::to_string(t + 1) + " mean " + num(raw[t]));
    }
    v.require(within(raw[8], published::task_time_overall, mean_tol),
              "overall " + num(raw[8]));
    v.detail << "overall " << num(raw[8]) << " vs " << published::task_time_overall;
  }
  v.require(elapsed < times_budget_s, "runtime " + num(elapsed) + " s");
  v.detail << ", " << num(elapsed, 3) << " s";
  return v;
}

verdict task_difficulty()
{
  verdict v;
  const auto raw = cli_raw_means("difficulty", v);
  v.require(raw.size() == 9, "expected 8 tasks + overall");
  if (raw.size() == 9) {
    for (std::size_t t = 0; t < 8; ++t) {
      v.require(within(raw[t], published::difficulty_means[t], mean_tol),
                "task " + std::to_string(t + 1) + " mean " + num(raw[t]));
    }
    v.require(within(raw[8], published::difficulty_overall, difficulty_overall_tol),
              "overall " + num(raw[8]));
    v.detail << "overall " << num(raw[8]) << " (2dp " << es::round_half_up(raw[8])
             << ") vs printed " << published::difficulty_overall;
  }
  return v;
}

verdict surveys()
{
  verdict v;
  for (std::size_t i = 0; i < fixtures::all_factors.size(); ++i) {
    const auto factor = fixtures::all_factors[i];
    const auto r = es::survey_stats(fixtures::survey(factor));
    const std::string name(fixtures::to_string(factor));
    v.require(r.items.size() == 5, name + ": item count");
    for (std::size_t k = 0; k < r.items.size() && k < 5; ++k) {
      v.require(within(r.items[k].mean, published::survey_item_means[i][k], mean_tol),
                name + " item " + std::to_string(k + 1) + " mean " + num(r.items[k].mean));
    }
    v.require(within(r.overall_mean, published::survey_overall_means[i], mean_tol),
              name + " overall " + num(r.overall_mean));
    v.require(r.band == es::likert_band::yes, name + " band " + std::string(es::to_string(r.band)));
    v.detail << (i ? ", " : "") << name << " " << num(r.overall_mean, 4) << " "
             << es::to_string(r.band);
  }
  return v;
}

verdict discovery()
{
  verdict v;
  const double lambda = es::solve_lambda(0.75, 5);
  v.require(within(lambda, 0.242142, lambda_tol), "lambda " + num(lambda, 9));
  const double p = es::discovery_proportion(es::discovery_model{ 0.31 }, 5);
  v.require(within(p, 0.84357, proportion_tol), "proportion " + num(p, 9));

  std::mt19937_64 rng(property_seed);
  // Keeps (1 - lambda)^(n+1) far from underflow so strict order is representable.
  std::uniform_real_distribution<double> lam(1e-4, 0.95);
  std::uniform_int_distribution<std::uint64_t> users(0, 200);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const es::discovery_model m{ lam(rng) };
    const auto n = users(rng);
    const es::discovery_model steeper{ std::min(1.0, m.lambda() * 1.01) };
    const double p_n = es::discovery_proportion(m, n);
    const double p_next = es::discovery_proportion(m, n + 1);
    bool ok = p_n >= 0.0 && p_next <= 1.0 && p_next >= p_n &&
              es::miss_proportion(m, n + 1) < es::miss_proportion(m, n) &&
              es::miss_proportion(steeper, n + 1) < es::miss_proportion(m, n + 1);
    // The inverse recovers the rate wherever p is not saturated at 1.
    if (p_next < 1.0 - 1e-6) {
      ok = ok && std::abs(es::solve_lambda(p_next, n + 1) - m.lambda()) <= 1e-6 * m.lambda();
    }
    violations += ok ? 0 : 1;
  }
  v.require(violations == 0, std::to_string(violations) + " property violations");
  v.detail << "lambda " << num(lambda, 7) << ", P(0.31,5) " << num(p, 6)
           << ", 1000 property cases";
  return v;
}

verdict resampling()
{
  verdict v;
  const std::size_t users = 60;
  const std::size_t trials = 1000;
  const auto d = es::synthetic_discovery_matrix(users, 40, 0.3, property_seed);
  const std::vector<std::size_t> ks{ 5, 10, 15, 20, 30, 40, 50, 60 };
  std::vector<es::resample_stats> rows;
  for (const auto k : ks) {
    rows.push_back(es::subgroup_resample(d, k, trials, property_seed));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    v.require(rows[i].mean_pct >= rows[i - 1].mean_pct,
              "mean drops at k=" + std::to_string(ks[i]));
    v.require(rows[i].std_pct <= rows[i - 1].std_pct,
              "std rises at k=" + std::to_string(ks[i]));
  }
  const auto& full = rows.back();
  v.require(full.min_pct == 100.0 && full.mean_pct == 100.0 && full.std_pct == 0.0,
            "full group " + num(full.min_pct) + "/" + num(full.mean_pct) + "/" +
              num(full.std_pct));
  v.detail << "k=5 mean " << num(rows.front().mean_pct, 4) << " std "
           << num(rows.front().std_pct, 4) << "; k=60 " << full.min_pct << "/" << full.mean_pct
           << "/" << full.std_pct;
  return v;
}

verdict spi_round_trip()
{
  verdict v;
  const auto t0 = clock_type::now();
  std::size_t failures = 0;
  std::size_t checked = 0;
  for (std::uint32_t code = 0; code <= adc12::max_code; ++code) {
    for (const auto ch : { adc_channel::x, adc_channel::y }) {
      const auto t = serialize_conversion(adc12{ code }, ch);
      // Reference decode straight from the wire bits.
      std::uint32_t wire = 0;
      for (std::size_t b = 0; b < spi_transaction::data_bits; ++b) {
        wire = (wire << 1U) | t.clocked_bits[spi_transaction::first_data_bit + b];
      }
      const bool ok = wire == code && deserialize_conversion(t).code() == code &&
                      t.control_byte == control_byte_for(ch);
      failures += ok ? 0 : 1;
      ++checked;
    }
  }
  const double elapsed = seconds_since(t0);
  v.require(failures == 0, std::to_string(failures) + " mismatches");
  v.require(checked == 8192, "checked " + std::to_string(checked));
  v.require(elapsed < spi_budget_s, "runtime " + num(elapsed) + " s");
  v.detail << checked << " transactions, " << num(elapsed, 3) << " s";
  return v;
}

verdict vga_timing()
{
  verdict v;
  const auto t0 = clock_type::now();
  const vga_timing_params params;
  const auto stats = measure_ticks(compose_frame(framebuffer{}, params));
  const double elapsed = seconds_since(t0);
  const double hz = refresh_hz(params);
  v.require(stats.ticks == 663168, "ticks " + std::to_string(stats.ticks));
  v.require(stats.hsync_pulses == 628, "hsync " + std::to_string(stats.hsync_pulses));
  v.require(stats.vsync_pulses == 1, "vsync " + std::to_string(stats.vsync_pulses));
  v.require(stats.active_pixels == 480000, "active " + std::to_string(stats.active_pixels));
  v.require(within(hz, 60.32, refresh_tol), "refresh " + num(hz));
  v.require(elapsed < vga_budget_s, "runtime " + num(elapsed) + " s");
  v.detail << stats.ticks << " ticks, " << stats.hsync_pulses << " hsync, " << stats.vsync_pulses
           << " vsync, " << stats.active_pixels << " active, " << num(hz, 6) << " Hz, "
           << num(elapsed, 3) << " s";
  return v;
}

bool is_pen(const trace_event& e)
{
  return std::holds_alternative<pen_input>(e.input);
}

verdict tasks8()
{
  verdict v;
  const auto events = parse_trace(fixtures::tasks8_trace());
  std::vector<pen_mode> mode_after(events.size());
  const auto run = run_trace(events, {}, [&](std::size_t i, const device& d) {
    mode_after[i] = d.mode();
  });
  v.require(!is_powered(run.final_state.power()), "final state is powered");
  v.require(run.final_state.fb() == framebuffer{}, "final framebuffer not cleared");

  // Stroke runs: maximal blocks of consecutive pen events.
  struct stroke
  {
    std::size_t first;
    std::size_t last;
  };
  std::vector<stroke> strokes;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (is_pen(events[i]) && (i == 0 || !is_pen(events[i - 1]))) {
      strokes.push_back({ i, i });
    }
    if (is_pen(events[i])) {
      strokes.back().last = i;
    }
  }
  auto same_path = [&](const stroke& a, const stroke& b) {
    if (a.last - a.first != b.last - b.first) {
      return false;
    }
    for (std::size_t k = 0; k <= a.last - a.first; ++k) {
      if (events[a.first + k].input != events[b.first + k].input) {
        return false;
      }
    }
    return true;
  };

  int normal_pairs = 0;
  int bold_pairs = 0;
  for (std::size_t s = 0; s + 1 < strokes.size(); ++s) {
    const auto& draw = strokes[s];
    const auto& erase = strokes[s + 1];
    const auto draw_mode = mode_after[draw.first];
    const auto erase_mode = mode_after[erase.first];
    if (is_erase(draw_mode) || !is_erase(erase_mode) || !same_path(draw, erase) ||
        draw.first == 0 || erase.last + 1 >= events.size()) {
      continue;
    }
    const auto before = run.log[draw.first - 1].fb_hash;
    const auto drawn = run.log[erase.first - 1].fb_hash;
    // First entry after the erase stroke, once its samples have drained.
    const auto after = run.log[erase.last + 1].fb_hash;
    const bool bold = kernel_size(draw_mode) == 7;
    v.require(drawn != before, std::string(bold ? "bold" : "normal") + " draw left no mark");
    v.require(after == before, std::string(bold ? "bold" : "normal") + " erase did not restore " +
                                 to_hex64(before) + " (got " + to_hex64(after) + ")");
    (bold ? bold_pairs : normal_pairs) += 1;
  }
  v.require(normal_pairs >= 1, "no normal draw/erase pair found");
  v.require(bold_pairs >= 1, "no bold draw/erase pair found");

  const auto reference = format_frame_log(run.log);
  for (int i = 0; i < 3; ++i) {
    const auto again = run_trace(events);
    v.require(format_frame_log(again.log) == reference, "frame log differs on run " +
                                                           std::to_string(i + 1));
    v.require(export_ppm(again.final_state.fb()) == export_ppm(run.final_state.fb()),
              "final image differs on run " + std::to_string(i + 1));
  }
  v.detail << events.size() << " events, " << normal_pairs << " normal + " << bold_pairs
           << " bold pairs, final hash " << to_hex64(run.final_state.fb().content_hash())
           << ", 3 identical logs";
  return v;
}

verdict render_properties()
{
  verdict v;
  std::mt19937_64 rng(property_seed);
  std::uniform_int_distribution<std::uint32_t> any(0, adc12::max_code);
  std::uniform_int_distribution<std::uint32_t> edge(0, 48);
  auto coord = [&]() -> std::uint32_t {
    // Half the samples hug an edge so the kernel clips.
    switch (rng() % 4) {
      case 0:
        return edge(rng);
      case 1:
        return adc12::max_code - edge(rng);
      default:
        return any(rng);
    }
  };
  constexpr std::array modes{ pen_mode::draw, pen_mode::erase, pen_mode::draw_bold,
                              pen_mode::erase_bold };

  std::size_t out_of_bounds = 0;
  framebuffer fb;
  std::uint64_t seq = 0;
  for (int s = 0; s < 10000; ++s) {
    const auto mode = modes[rng() % modes.size()];
    const auto color = rng() % 2 ? pen_color::red : pen_color::blue;
    std::optional<touch_sample> prev;
    const auto len = 1 + rng() % 6;
    for (std::size_t i = 0; i < len; ++i) {
      const touch_sample cur{ true, adc12{ coord() }, adc12{ coord() }, ++seq };
      try {
        apply_stroke_step(fb, prev, cur, mode, color);
      } catch (const std::out_of_range&) {
        ++out_of_bounds;
      }
      prev = cur;
    }
  }
  v.require(out_of_bounds == 0, std::to_string(out_of_bounds) + " out-of-range writes");
  v.require(fb.width() == panel_width && fb.height() == panel_height &&
              fb.bytes().size() == static_cast<std::size_t>(panel_width * panel_height * 3),
            "framebuffer geometry changed");

  std::size_t broken = 0;
  for (int s = 0; s < 500; ++s) {
    const bool bold = rng() % 2 == 0;
    framebuffer canvas;
    const auto blank = canvas.content_hash();
    std::vector<touch_sample> path;
    const auto len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) {
      path.push_back({ true, adc12{ coord() }, adc12{ coord() }, i + 1 });
    }
    for (const auto mode : { bold ? pen_mode::draw_bold : pen_mode::draw,
                             bold ? pen_mode::erase_bold : pen_mode::erase }) {
      std::optional<touch_sample> prev;
      for (const auto& cur : path) {
        apply_stroke_step(canvas, prev, cur, mode, rng() % 2 ? pen_color::red : pen_color::blue);
        prev = cur;
      }
    }
    broken += canvas.content_hash() == blank ? 0 : 1;
  }
  v.require(broken == 0, std::to_string(broken) + " paths not restored by erase");
  v.detail << "10000 strokes, 0 out-of-range; 500 inversions";
  return v;
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<verdict()>>> criteria{
    { "task-time means", task_times },
    { "task-difficulty means", task_difficulty },
    { "survey factor means and bands", surveys },
    { "problem-discovery model", discovery },
    { "subgroup resampling", resampling },
    { "SPI round trip", spi_round_trip },
    { "VGA frame timing", vga_timing },
    { "8-task trace replay", tasks8 },
    { "render properties", render_properties },
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "threw: " << e.what();
    }
    failed += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << "  [" << v.detail.str() << "]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed;
}

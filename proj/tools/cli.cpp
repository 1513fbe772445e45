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


#include "cli.hpp"

#include <touchboard/csv.hpp>
#include <touchboard/device.hpp>
#include <touchboard/errors.hpp>
#include <touchboard/evalstats.hpp>
#include <touchboard/fixtures.hpp>
#include <touchboard/hash.hpp>
#include <touchboard/report.hpp>
#include <touchboard/trace.hpp>
#include <touchboard/video_out.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace touchboard::cli {

namespace {

namespace fs = std::filesystem;

struct replay_args
{
  std::string trace_path;
  std::string out_dir = "touchboard-out";
  std::string snapshot_every = "end";
};

struct vga_args
{
  std::uint64_t frames = 1;
};

struct evalstats_args
{
  std::string kind;
  bool fixtures = false;
  std::string input;
  std::string format = "text";
  std::string factor;
  std::optional<double> lambda;
  std::optional<double> target;
  std::uint64_t n = 5;
  std::uint64_t curve = 0;
  std::vector<std::size_t> ks{ 5, 10, 15, 20, 30, 40, 50 };
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::size_t users = 60;
  std::size_t problems = 40;
  double hit_probability = 0.3;
};

void write_file(const fs::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

int do_replay(const replay_args& a, std::ostream& out)
{
  if (!fs::is_regular_file(a.trace_path)) {
    throw std::runtime_error("trace file not found: " + a.trace_path);
  }
  const bool per_event = a.snapshot_every == "events";

  const auto events = load_trace(a.trace_path);
  std::vector<std::pair<std::size_t, std::vector<std::uint8_t>>> snapshots;
  trace_observer observer;
  if (per_event) {
    observer = [&](std::size_t index, const device& dev) {
      snapshots.emplace_back(index, export_ppm(dev.fb()));
    };
  }
  const auto result = run_trace(events, {}, observer);
  const auto& dev = result.final_state;

  // Everything is computed before the first byte hits the disk.
  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  write_ppm(dir / "final.ppm", dev.fb());
  write_file(dir / "framelog.tsv", format_frame_log(result.log));
  for (const auto& [index, bytes] : snapshots) {
    char name[32];
    std::snprintf(name, sizeof name, "event_%05zu.ppm", index);
    write_file(dir / name, std::string(bytes.begin(), bytes.end()));
  }

  std::ostringstream summary;
  summary << "events=" << events.size() << " ticks=" << dev.tick_count()
          << " power=" << to_string(dev.power()) << " mode=" << to_string(dev.mode())
          << " color=" << to_string(dev.color())
          << " fb_hash=" << to_hex64(dev.fb().content_hash())
          << " sevenseg=\"" << readout(dev.digits()) << "\"";
  write_file(dir / "summary.txt", summary.str() + "\n");
  out << summary.str() << '\n';
  return exit_ok;
}

int do_vga_report(const vga_args& a, std::ostream& out)
{
  out << timing_report(a.frames);
  return exit_ok;
}

report::format parse_format(const std::string& f)
{
  return f == "csv" ? report::format::csv : report::format::text;
}

evalstats::task_matrix load_task_matrix(const evalstats_args& a, bool difficulty)
{
  if (a.fixtures) {
    return difficulty ? fixtures::task_difficulty() : fixtures::task_times();
  }
  std::ifstream in(a.input);
  if (!in) {
    throw std::runtime_error("cannot open " + a.input);
  }
  return read_task_matrix(in);
}

std::uint64_t resolve_seed(const evalstats_args& a)
{
  if (a.seed) {
    return *a.seed;
  }
  if (const char* env = std::getenv("TOUCHBOARD_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') {
      throw std::invalid_argument("TOUCHBOARD_SEED must be an unsigned integer");
    }
    return v;
  }
  return 0;
}

int do_evalstats(const evalstats_args& a, std::ostream& out)
{
  const auto fmt = parse_format(a.format);
  const bool needs_table = a.kind == "times" || a.kind == "difficulty" || a.kind == "survey";
  if (needs_table && !a.fixtures && a.input.empty()) {
    throw std::invalid_argument("pass --fixtures or --input <csv>");
  }

  if (a.kind == "times") {
    const auto m = load_task_matrix(a, false);
    out << report::means("task completion times (s)", m, evalstats::task_means(m), fmt);
    return exit_ok;
  }
  if (a.kind == "difficulty") {
    const auto m = load_task_matrix(a, true);
    out << report::means("task difficulty (1 very difficult .. 5 very easy)", m,
                         evalstats::difficulty_means(m), fmt);
    return exit_ok;
  }
  if (a.kind == "survey") {
    std::vector<evalstats::survey_table> tables;
    if (a.fixtures) {
      if (a.factor.empty()) {
        for (const auto f : fixtures::all_factors) {
          tables.push_back(fixtures::survey(f));
        }
      } else {
        const auto f = fixtures::parse_survey_factor(a.factor);
        if (!f) {
          throw std::invalid_argument("unknown factor '" + a.factor + "'");
        }
        tables.push_back(fixtures::survey(*f));
      }
    } else {
      std::ifstream in(a.input);
      if (!in) {
        throw std::runtime_error("cannot open " + a.input);
      }
      const auto name = a.factor.empty() ? fs::path(a.input).stem().string() : a.factor;
      tables.push_back(read_survey_table(in, name));
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i > 0) {
        out << '\n';
      }
      out << report::survey(evalstats::survey_stats(tables[i]), fmt);
    }
    return exit_ok;
  }
  if (a.kind == "discovery") {
    if (a.target) {
      const double lambda = evalstats::solve_lambda(*a.target, a.n);
      if (fmt == report::format::csv) {
        out << "target,n,lambda\n"
            << report::fixed(*a.target, 4) << ',' << a.n << ',' << report::fixed(lambda, 6) << '\n';
      } else {
        out << "lambda: " << report::fixed(lambda, 6) << " (finds "
            << report::fixed(*a.target, 4) << " with n = " << a.n << ")\n";
      }
      return exit_ok;
    }
    if (!a.lambda) {
      throw std::invalid_argument("discovery needs --lambda or --target");
    }
    const evalstats::discovery_model model(*a.lambda);
    if (a.curve > 0) {
      out << (fmt == report::format::csv ? "n,proportion\n" : "n  proportion\n");
      for (std::uint64_t n = 0; n <= a.curve; ++n) {
        out << n << (fmt == report::format::csv ? "," : "  ")
            << report::fixed(evalstats::discovery_proportion(model, n), 4) << '\n';
      }
      return exit_ok;
    }
    const double p = evalstats::discovery_proportion(model, a.n);
    if (fmt == report::format::csv) {
      out << "lambda,n,proportion\n" << *a.lambda << ',' << a.n << ',' << report::fixed(p, 4) << '\n';
    } else {
      out << "proportion: " << report::fixed(p, 4) << " (lambda " << *a.lambda
          << ", n = " << a.n << ")\n";
    }
    return exit_ok;
  }
  if (a.kind == "resample") {
    const auto seed = resolve_seed(a);
    std::optional<evalstats::discovery_matrix> d;
    if (!a.input.empty()) {
      std::ifstream in(a.input);
      if (!in) {
        throw std::runtime_error("cannot open " + a.input);
      }
      d = read_discovery_matrix(in);
    } else {
      d = evalstats::synthetic_discovery_matrix(a.users, a.problems, a.hit_probability, seed);
    }
    std::vector<report::resample_row> rows;
    for (const auto k : a.ks) {
      rows.push_back({ k, evalstats::subgroup_resample(*d, k, a.trials, seed) });
    }
    out << report::resample(rows, d->users(), a.trials, seed, fmt);
    return exit_ok;
  }
  throw std::invalid_argument("unknown evalstats kind '" + a.kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{ "touchboard: FPGA touchscreen whiteboard simulator and usability statistics" };
  app.require_subcommand(1);

  replay_args replay;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a trace file through the simulated device");
  replay_cmd->add_option("trace", replay.trace_path, "Trace file")->required();
  replay_cmd->add_option("-o,--out", replay.out_dir, "Output directory")->capture_default_str();
  replay_cmd->add_option("--snapshot-every", replay.snapshot_every, "end or events")
    ->check(CLI::IsMember({ "end", "events" }));

  vga_args vga;
  auto* vga_cmd = app.add_subcommand("vga-report", "Count VGA ticks and sync pulses");
  vga_cmd->add_option("--frames", vga.frames, "Frames to simulate")->check(CLI::Range(1, 1000));

  evalstats_args stats;
  auto* stats_cmd = app.add_subcommand("evalstats", "Usability-study statistics");
  stats_cmd->add_option("kind", stats.kind, "times|difficulty|survey|discovery|resample")
    ->required()
    ->check(CLI::IsMember({ "times", "difficulty", "survey", "discovery", "resample" }));
  stats_cmd->add_flag("--fixtures", stats.fixtures, "Use the bundled study data");
  stats_cmd->add_option("--input", stats.input, "CSV input file");
  stats_cmd->add_option("--format", stats.format, "text or csv")
    ->check(CLI::IsMember({ "text", "csv" }));
  stats_cmd->add_option("--factor", stats.factor,
                        "subservientness|user-friendliness|usability");
  stats_cmd->add_option("--lambda", stats.lambda, "Per-evaluator discovery rate");
  stats_cmd->add_option("--target", stats.target, "Target proportion to solve lambda for");
  stats_cmd->add_option("--n", stats.n, "Number of evaluators");
  stats_cmd->add_option("--curve", stats.curve, "Print the curve for n = 0..N");
  stats_cmd->add_option("--k", stats.ks, "Subgroup sizes")->delimiter(',');
  stats_cmd->add_option("--trials", stats.trials, "Resampling trials per group size");
  stats_cmd->add_option("--seed", stats.seed, "RNG seed (default: $TOUCHBOARD_SEED or 0)");
  stats_cmd->add_option("--users", stats.users, "Synthetic corpus users");
  stats_cmd->add_option("--problems", stats.problems, "Synthetic corpus problems");
  stats_cmd->add_option("--hit-prob", stats.hit_probability, "Synthetic per-cell hit probability");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (replay_cmd->parsed()) {
      return do_replay(replay, out);
    }
    if (vga_cmd->parsed()) {
      return do_vga_report(vga, out);
    }
    return do_evalstats(stats, out);
  } catch (const trace_parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const csv_error& e) {
    err << "malformed csv: " << e.what() << '\n';
    return exit_parse;
  } catch (const trace_order_error& e) {
    err << "trace order error: " << e.what() << '\n';
    return exit_trace_order;
  } catch (const row_sum_mismatch& e) {
    err << "invariant violation: " << e.what() << '\n';
    return exit_invariant;
  } catch (const out_of_scale& e) {
    err << "invariant violation: " << e.what() << '\n';
    return exit_invariant;
  } catch (const malformed_matrix& e) {
    err << "invariant violation: " << e.what() << '\n';
    return exit_invariant;
  } catch (const empty_matrix& e) {
    err << "invariant violation: " << e.what() << '\n';
    return exit_invariant;
  } catch (const bad_group_size& e) {
    err << "invariant violation: " << e.what() << '\n';
    return exit_invariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace touchboard::cli

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


#include <touchboard/device.hpp>
#include <touchboard/errors.hpp>

#include <doctest.h>

#include <random>

using namespace touchboard;

namespace {

std::size_t colored(const framebuffer& fb)
{
  std::size_t n = 0;
  for (int r = 0; r < fb.height(); ++r) {
    for (int c = 0; c < fb.width(); ++c) {
      n += fb.at(c, r) != background_color ? 1 : 0;
    }
  }
  return n;
}

device powered()
{
  device d;
  d.press(button_id::power_adaptor);
  return d;
}

}  // namespace

TEST_CASE("initial state")
{
  device d;
  CHECK_FALSE(is_powered(d.power()));
  CHECK(d.mode() == pen_mode::draw);
  CHECK(d.color() == pen_color::red);
  CHECK(d.store().empty());
  CHECK(readout(d.digits()) == "000 000");
  CHECK(d.fb() == framebuffer{});
}

TEST_CASE("button names round-trip")
{
  for (const auto b : all_buttons) {
    CHECK(parse_button(to_string(b)) == b);
  }
  CHECK(parse_button("PowerAdaptor") == button_id::power_adaptor);
  CHECK(parse_button("erase_bold") == button_id::erase_bold);
  CHECK_FALSE(parse_button("reboot").has_value());
}

TEST_CASE("mode and colour buttons")
{
  auto d = powered();
  d.press(button_id::erase_bold);
  CHECK(d.mode() == pen_mode::erase_bold);
  d.press(button_id::draw_bold);
  CHECK(d.mode() == pen_mode::draw_bold);
  d.press(button_id::color_toggle);
  CHECK(d.color() == pen_color::blue);
  d.press(button_id::color_toggle);
  CHECK(d.color() == pen_color::red);
}

TEST_CASE("buttons other than power do nothing while off")
{
  device d;
  const auto before = d;
  for (const auto b : { button_id::erase, button_id::draw_bold, button_id::color_toggle,
                        button_id::clear, button_id::erase_bold }) {
    d.press(b);
    CHECK(d == before);
  }
  // Pen input while off is not sampled.
  d.step(pen_input::down(0.5, 0.5));
  d.step();
  d.step();
  CHECK(d.store().empty());
  CHECK(d.pending_samples() == 0);
}

TEST_CASE("pen samples arrive after the delay and draw")
{
  auto d = powered();
  d.step(pen_input::down(0.5, 0.5));
  CHECK(d.store().empty());
  d.step();
  CHECK(d.store().empty());
  d.step();
  REQUIRE(d.store().size() == 1);
  CHECK(d.store().read_latest()->x == quantize(0.5));
  CHECK(colored(d.fb()) == 9);
  CHECK(readout(d.digits()) == "800 800");
}

TEST_CASE("no sample is observable before its delay elapses")
{
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const std::uint64_t depth : { 1U, 2U, 5U }) {
    device_config cfg;
    cfg.delay_depth = depth;
    device d(cfg);
    d.press(button_id::power_adaptor);
    std::vector<std::uint64_t> entered;  // tick each sample was taken, by seq order
    for (int i = 0; i < 300; ++i) {
      const auto now = d.tick_count();
      if (rng() % 2 == 0) {
        d.step(pen_input::move(u(rng), u(rng)));
        entered.push_back(now);
      } else {
        d.step();
      }
      // Samples taken at tick t are visible from the end of tick t+depth on.
      std::size_t due = 0;
      for (const auto t : entered) {
        due += t + depth <= now ? 1 : 0;
      }
      REQUIRE(d.store().size() == std::min(due, d.store().capacity()));
    }
  }
}

TEST_CASE("clear blanks the framebuffer but keeps mode and colour")
{
  auto d = powered();
  d.press(button_id::color_toggle);
  d.press(button_id::draw_bold);
  d.step(pen_input::down(0.3, 0.3));
  d.step(pen_input::move(0.6, 0.6));
  d.step();
  d.step();
  CHECK(colored(d.fb()) > 0);
  d.press(button_id::clear);
  CHECK(d.fb() == framebuffer{});
  CHECK(d.color() == pen_color::blue);
  CHECK(d.mode() == pen_mode::draw_bold);
}

TEST_CASE("power off resets everything and is idempotent")
{
  auto d = powered();
  d.press(button_id::erase);
  d.step(pen_input::down(0.3, 0.3));
  d.step(pen_input::move(0.6, 0.6));
  d.step(pen_input::move(0.7, 0.6));
  d.press(button_id::power_off);
  CHECK_FALSE(is_powered(d.power()));
  CHECK(d.fb() == framebuffer{});
  CHECK(d.store().empty());
  CHECK(d.pending_samples() == 0);
  CHECK(readout(d.digits()) == "000 000");
  CHECK(d.mode() == pen_mode::draw);
  const auto once = d;
  d.press(button_id::power_off);
  CHECK(d == once);
}

TEST_CASE("power on from off starts in draw/red with a blank canvas")
{
  auto d = powered();
  d.press(button_id::color_toggle);
  d.press(button_id::erase);
  d.press(button_id::power_off);
  d.press(button_id::power_battery);
  CHECK(std::holds_alternative<power_battery>(d.power()));
  CHECK(d.mode() == pen_mode::draw);
  CHECK(d.color() == pen_color::red);
}

TEST_CASE("switching supply while on keeps the drawing")
{
  auto d = powered();
  d.step(pen_input::down(0.3, 0.3));
  d.step();
  d.step();
  const auto hash = d.fb().content_hash();
  d.press(button_id::power_battery);
  CHECK(std::holds_alternative<power_battery>(d.power()));
  CHECK(d.fb().content_hash() == hash);
  d.press(button_id::power_adaptor);
  CHECK(d.fb().content_hash() == hash);
}

TEST_CASE("battery drains monotonically and flags low charge")
{
  device_config cfg;
  cfg.battery_drain_per_tick = 0.01;
  device d(cfg);
  d.press(button_id::power_battery);
  double last = d.battery_level();
  bool was_low = false;
  for (int i = 0; i < 150; ++i) {
    d.step();
    REQUIRE(d.battery_level() <= last);
    REQUIRE(d.battery_level() >= 0.0);
    last = d.battery_level();
    // Once low, it stays low.
    if (was_low) {
      REQUIRE(d.low_battery());
    }
    was_low = d.low_battery();
    REQUIRE(d.low_battery() == (d.battery_level() < low_battery_threshold));
  }
  CHECK(d.battery_level() == 0.0);
  CHECK(d.low_battery());

  // The adaptor never drains, and the pack remembers its level.
  d.press(button_id::power_adaptor);
  CHECK_FALSE(d.low_battery());
  d.step();
  d.press(button_id::power_off);
  d.press(button_id::power_battery);
  CHECK(d.battery_level() == 0.0);
}

TEST_CASE("device is deterministic")
{
  std::mt19937_64 rng(23);
  std::vector<std::optional<device_input>> inputs;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    switch (rng() % 5) {
      case 0:
        inputs.emplace_back(all_buttons[rng() % all_buttons.size()]);
        break;
      case 1:
        inputs.emplace_back(std::nullopt);
        break;
      case 2:
        inputs.emplace_back(pen_input::up());
        break;
      default:
        inputs.emplace_back(pen_input::move(u(rng), u(rng)));
    }
  }
  device a;
  device b;
  for (const auto& in : inputs) {
    a.step(in);
    b.step(in);
    REQUIRE(a == b);
  }
}

TEST_CASE("delay_line")
{
  CHECK_THROWS_AS(delay_line<int>{ 0 }, std::invalid_argument);
  delay_line<int> line(2);
  line.push(0, 1);
  line.push(1, 2);
  CHECK(line.pop_ready(1).empty());
  CHECK(line.pop_ready(2) == std::vector<int>{ 1 });
  CHECK(line.pop_ready(5) == std::vector<int>{ 2 });
}

TEST_CASE("run_trace")
{
  SUBCASE("rejects decreasing timestamps")
  {
    const std::vector<trace_event> events{ { 5, button_id::power_adaptor },
                                           { 3, button_id::draw } };
    CHECK_THROWS_AS((void)run_trace(events), trace_order_error);
  }

  SUBCASE("empty trace")
  {
    const auto r = run_trace({});
    CHECK(r.log.size() == 1);
    CHECK_FALSE(r.log.front().event_index.has_value());
    CHECK(r.final_state == device{});
  }

  SUBCASE("drains the delay line before the closing entry")
  {
    const std::vector<trace_event> events{ { 0, button_id::power_adaptor },
                                           { 1, pen_input::down(0.5, 0.5) } };
    const auto r = run_trace(events);
    CHECK(r.final_state.store().size() == 1);
    CHECK(r.final_state.pending_samples() == 0);
    CHECK(r.log.back().tick == 4);
    CHECK(r.log.back().readout == "800 800");
    CHECK(r.log[1].readout == "000 000");
  }

  SUBCASE("observer sees every event")
  {
    const std::vector<trace_event> events{ { 0, button_id::power_adaptor },
                                           { 0, button_id::erase },
                                           { 7, button_id::draw } };
    std::vector<std::size_t> seen;
    const auto r = run_trace(events, {}, [&](std::size_t i, const device&) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{ 0, 1, 2 });
    CHECK(r.log[1].tick == 2);
    CHECK(r.log[2].tick == 8);
  }

  SUBCASE("frame log format")
  {
    const auto r = run_trace(std::vector<trace_event>{ { 0, button_id::power_adaptor } });
    const auto text = format_frame_log(r.log);
    CHECK(text.rfind("event\ttick\tfb_hash\tsevenseg\n", 0) == 0);
    CHECK(text.find("\nend\t1\t") != std::string::npos);
  }
}

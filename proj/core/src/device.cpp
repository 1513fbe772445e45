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
#include <touchboard/hash.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

namespace touchboard {

std::string_view to_string(const power_state& p)
{
  if (std::holds_alternative<power_adaptor>(p)) {
    return "on-adaptor";
  }
  if (std::holds_alternative<power_battery>(p)) {
    return "on-battery";
  }
  return "off";
}

std::string_view to_string(button_id b)
{
  switch (b) {
    case button_id::power_adaptor:
      return "power-adaptor";
    case button_id::power_battery:
      return "power-battery";
    case button_id::power_off:
      return "power-off";
    case button_id::draw:
      return "draw";
    case button_id::erase:
      return "erase";
    case button_id::draw_bold:
      return "draw-bold";
    case button_id::erase_bold:
      return "erase-bold";
    case button_id::color_toggle:
      return "color-toggle";
    case button_id::clear:
      return "clear";
  }
  return "unknown";
}

namespace {

std::string fold_name(std::string_view text)
{
  std::string out;
  for (const char c : text) {
    if (c == '-' || c == '_') {
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

std::optional<button_id> parse_button(std::string_view text)
{
  const auto folded = fold_name(text);
  for (const auto b : all_buttons) {
    if (fold_name(to_string(b)) == folded) {
      return b;
    }
  }
  return std::nullopt;
}

device::device(device_config config)
  : m_config(config)
  , m_delay(config.delay_depth)
  , m_store(config.store_capacity)
  , m_digits(zero_bank())
{
}

double device::battery_level() const noexcept
{
  const auto* battery = std::get_if<power_battery>(&m_power);
  return battery != nullptr ? battery->charge : m_battery_level;
}

bool device::low_battery() const noexcept
{
  const auto* battery = std::get_if<power_battery>(&m_power);
  return battery != nullptr && battery->charge < low_battery_threshold;
}

void device::power_on(power_state source)
{
  if (is_powered(m_power)) {
    // Switching supply while running keeps the drawing.
    if (const auto* battery = std::get_if<power_battery>(&m_power)) {
      m_battery_level = battery->charge;
    }
    m_power = source;
    return;
  }
  m_power = source;
  m_mode = pen_mode::draw;
  m_color = pen_color::red;
  clear(m_fb);
}

void device::shut_down()
{
  if (const auto* battery = std::get_if<power_battery>(&m_power)) {
    m_battery_level = battery->charge;
  }
  m_power = power_off{};
  m_mode = pen_mode::draw;
  m_color = pen_color::red;
  clear(m_fb);
  m_store.reset();
  m_delay.clear();
  m_touch.reset();
  m_prev_sample.reset();
  m_digits = zero_bank();
}

void device::press(button_id b)
{
  switch (b) {
    case button_id::power_adaptor:
      power_on(power_adaptor{});
      return;
    case button_id::power_battery:
      power_on(power_battery{ m_battery_level });
      return;
    case button_id::power_off:
      shut_down();
      return;
    default:
      break;
  }
  if (!is_powered(m_power)) {
    return;
  }
  switch (b) {
    case button_id::draw:
      m_mode = pen_mode::draw;
      break;
    case button_id::erase:
      m_mode = pen_mode::erase;
      break;
    case button_id::draw_bold:
      m_mode = pen_mode::draw_bold;
      break;
    case button_id::erase_bold:
      m_mode = pen_mode::erase_bold;
      break;
    case button_id::color_toggle:
      m_color = m_color == pen_color::red ? pen_color::blue : pen_color::red;
      break;
    case button_id::clear:
      clear(m_fb);
      break;
    default:
      break;
  }
}

void device::commit(const touch_sample& s)
{
  m_store.write_sample(s);
  const auto latest = *m_store.read_latest();
  if (latest.pen_down) {
    apply_stroke_step(m_fb, m_prev_sample, latest, m_mode, m_color);
  }
  m_digits = display_sample(latest);
  m_prev_sample = latest;
}

void device::step(const std::optional<device_input>& input)
{
  if (input) {
    if (const auto* b = std::get_if<button_id>(&*input)) {
      press(*b);
    } else if (is_powered(m_power)) {
      m_delay.push(m_tick_count, m_touch.sample(std::get<pen_input>(*input)));
    }
  }
  if (is_powered(m_power)) {
    for (const auto& s : m_delay.pop_ready(m_tick_count)) {
      commit(s);
    }
  }
  if (auto* battery = std::get_if<power_battery>(&m_power)) {
    battery->charge = std::max(0.0, battery->charge - m_config.battery_drain_per_tick);
  }
  ++m_tick_count;
}

std::string format_frame_log(const frame_log& log)
{
  std::ostringstream os;
  os << "event\ttick\tfb_hash\tsevenseg\n";
  for (const auto& e : log) {
    if (e.event_index) {
      os << *e.event_index;
    } else {
      os << "end";
    }
    os << '\t' << e.tick << '\t' << to_hex64(e.fb_hash) << '\t' << e.readout
       << '\n';
  }
  return os.str();
}

trace_result run_trace(std::span<const trace_event> events,
                       const device_config& config,
                       const trace_observer& observer)
{
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].at < events[i - 1].at) {
      throw trace_order_error("event " + std::to_string(i) + " at tick " +
                              std::to_string(events[i].at) +
                              " precedes tick " +
                              std::to_string(events[i - 1].at));
    }
  }

  trace_result result{ device(config), {} };
  auto& dev = result.final_state;
  auto record = [&](std::optional<std::size_t> index) {
    result.log.push_back(
      { index, dev.tick_count(), dev.fb().content_hash(), readout(dev.digits()) });
  };

  for (std::size_t i = 0; i < events.size(); ++i) {
    while (dev.tick_count() < events[i].at) {
      dev.step();
    }
    dev.step(events[i].input);
    record(i);
    if (observer) {
      observer(i, dev);
    }
  }
  while (dev.pending_samples() > 0) {
    dev.step();
  }
  record(std::nullopt);
  return result;
}

}  // namespace touchboard

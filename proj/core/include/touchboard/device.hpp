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

#include <touchboard/coord_store.hpp>
#include <touchboard/render.hpp>
#include <touchboard/sevenseg.hpp>
#include <touchboard/touch_path.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace touchboard {

struct power_off
{
  friend constexpr bool operator==(power_off, power_off) = default;
};

struct power_adaptor
{
  friend constexpr bool operator==(power_adaptor, power_adaptor) = default;
};

struct power_battery
{
  double charge = 1.0;  // 0..1

  friend constexpr bool operator==(power_battery, power_battery) = default;
};

using power_state = std::variant<power_off, power_adaptor, power_battery>;

[[nodiscard]] inline bool is_powered(const power_state& p) noexcept
{
  return !std::holds_alternative<power_off>(p);
}

/// "off", "on-adaptor" or "on-battery".
[[nodiscard]] std::string_view to_string(const power_state& p);

/// Charge level below which the gauge reports low battery.
inline constexpr double low_battery_threshold = 0.05;

enum class button_id : std::uint8_t
{
  power_adaptor,
  power_battery,
  power_off,
  draw,
  erase,
  draw_bold,
  erase_bold,
  color_toggle,
  clear,
};

inline constexpr std::array<button_id, 9> all_buttons{
  button_id::power_adaptor, button_id::power_battery, button_id::power_off,
  button_id::draw,          button_id::erase,         button_id::draw_bold,
  button_id::erase_bold,    button_id::color_toggle,  button_id::clear,
};

/// Kebab-case name, e.g. "power-adaptor".
[[nodiscard]] std::string_view to_string(button_id b);

/// Accepts kebab-case, snake_case or CamelCase names, case-insensitively.
[[nodiscard]] std::optional<button_id> parse_button(std::string_view text);

/// Fixed-latency pipeline stage: a value pushed at tick t is released at
/// tick t + depth and not earlier.
template<typename T>
class delay_line
{
public:
  explicit delay_line(std::uint64_t depth)
    : m_depth(depth)
  {
    if (depth == 0) {
      throw std::invalid_argument("delay depth must be positive");
    }
  }

  void push(std::uint64_t tick, T value)
  {
    m_pending.push_back({ tick + m_depth, std::move(value) });
  }

  /// Removes and returns every value due at or before `now`, oldest first.
  std::vector<T> pop_ready(std::uint64_t now)
  {
    std::vector<T> out;
    while (!m_pending.empty() && m_pending.front().due <= now) {
      out.push_back(std::move(m_pending.front().value));
      m_pending.pop_front();
    }
    return out;
  }

  void clear() noexcept { m_pending.clear(); }

  [[nodiscard]] std::uint64_t depth() const noexcept { return m_depth; }
  [[nodiscard]] std::size_t pending() const noexcept { return m_pending.size(); }

  friend bool operator==(const delay_line& lhs, const delay_line& rhs)
  {
    return lhs.m_depth == rhs.m_depth && lhs.m_pending == rhs.m_pending;
  }

private:
  struct entry
  {
    std::uint64_t due;
    T value;

    friend bool operator==(const entry&, const entry&) = default;
  };

  std::uint64_t m_depth;
  std::deque<entry> m_pending;
};

struct device_config
{
  std::uint64_t delay_depth = 2;
  double battery_drain_per_tick = 1e-6;
  std::size_t store_capacity = coord_register_file::default_capacity;

  friend bool operator==(const device_config&, const device_config&) = default;
};

/// What a trace event or a bridge message feeds into one device step.
using device_input = std::variant<button_id, pen_input>;

/// The whole simulated machine as a copyable value: power/mode state
/// machine, touch controller, delay line, coordinate store, framebuffer and
/// seven-segment banks.
class device
{
public:
  explicit device(device_config config = {});

  /// Applies a button immediately. Mode, colour and clear buttons do
  /// nothing while the device is off.
  void press(button_id b);

  /// One scheduling tick. Pen input is sampled (when powered) and enters
  /// the delay line; samples leaving the delay line are stored, rendered
  /// and shown on the digit banks in this same tick.
  void step(const std::optional<device_input>& input = std::nullopt);

  [[nodiscard]] const device_config& config() const noexcept { return m_config; }
  [[nodiscard]] const power_state& power() const noexcept { return m_power; }
  [[nodiscard]] pen_mode mode() const noexcept { return m_mode; }
  [[nodiscard]] pen_color color() const noexcept { return m_color; }
  [[nodiscard]] const coord_register_file& store() const noexcept { return m_store; }
  [[nodiscard]] const framebuffer& fb() const noexcept { return m_fb; }
  [[nodiscard]] const digit_bank& digits() const noexcept { return m_digits; }
  [[nodiscard]] const std::optional<touch_sample>& prev_sample() const noexcept
  {
    return m_prev_sample;
  }
  [[nodiscard]] std::uint64_t tick_count() const noexcept { return m_tick_count; }
  [[nodiscard]] std::size_t pending_samples() const noexcept
  {
    return m_delay.pending();
  }
  /// Remaining charge of the battery pack, whether or not it is in use.
  [[nodiscard]] double battery_level() const noexcept;
  [[nodiscard]] bool low_battery() const noexcept;

  friend bool operator==(const device&, const device&) = default;

private:
  void power_on(power_state source);
  void shut_down();
  void commit(const touch_sample& s);

  device_config m_config;
  power_state m_power = power_off{};
  pen_mode m_mode = pen_mode::draw;
  pen_color m_color = pen_color::red;
  touch_controller m_touch;
  delay_line<touch_sample> m_delay;
  coord_register_file m_store;
  framebuffer m_fb;
  digit_bank m_digits;
  std::optional<touch_sample> m_prev_sample;
  std::uint64_t m_tick_count = 0;
  double m_battery_level = 1.0;
};

struct trace_event
{
  std::uint64_t at = 0;
  device_input input;

  friend bool operator==(const trace_event&, const trace_event&) = default;
};

struct frame_log_entry
{
  /// Index of the event just applied; nullopt for the closing entry written
  /// after the delay line drains.
  std::optional<std::size_t> event_index;
  std::uint64_t tick = 0;
  std::uint64_t fb_hash = 0;
  std::string readout;

  friend bool operator==(const frame_log_entry&, const frame_log_entry&) = default;
};

using frame_log = std::vector<frame_log_entry>;

/// Tab-separated: header line, then "<event|end>\t<tick>\t<hash>\t<digits>".
[[nodiscard]] std::string format_frame_log(const frame_log& log);

struct trace_result
{
  device final_state;
  frame_log log;
};

/// Replays events in order, idling between timestamps. An event scheduled
/// for a tick that already passed (several events sharing one tick) is
/// applied on the next free tick. After the last event the device idles
/// until the delay line is empty. Throws trace_order_error if timestamps
/// decrease.
/// Called after each event with its index and the device state.
using trace_observer = std::function<void(std::size_t, const device&)>;

[[nodiscard]] trace_result run_trace(std::span<const trace_event> events,
                                     const device_config& config = {},
                                     const trace_observer& observer = {});

}  // namespace touchboard

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
#include <cstdint>
#include <optional>

namespace touchboard {

/// A 12-bit ADC conversion result, 0..4095.
class adc12
{
public:
  static constexpr std::uint16_t max_code = 4095;
  static constexpr std::uint32_t levels = 4096;

  constexpr adc12() = default;
  /// Throws std::out_of_range for codes above 4095.
  explicit adc12(std::uint32_t code);

  [[nodiscard]] constexpr std::uint16_t code() const noexcept { return m_code; }

  friend constexpr bool operator==(adc12, adc12) = default;
  friend constexpr auto operator<=>(adc12, adc12) = default;

private:
  std::uint16_t m_code = 0;
};

enum class pen_phase : std::uint8_t
{
  down,
  move,
  up,
};

/// Pen activity on the panel's active area. Coordinates are normalized and
/// clamped to [0, 1]; an `up` input carries none.
class pen_input
{
public:
  static pen_input down(double nx, double ny);
  static pen_input move(double nx, double ny);
  static pen_input up();

  [[nodiscard]] pen_phase phase() const noexcept { return m_phase; }
  [[nodiscard]] bool has_position() const noexcept
  {
    return m_phase != pen_phase::up;
  }
  /// Only meaningful when has_position().
  [[nodiscard]] double nx() const noexcept { return m_nx; }
  [[nodiscard]] double ny() const noexcept { return m_ny; }

  friend bool operator==(const pen_input&, const pen_input&) = default;

private:
  pen_input(pen_phase phase, double nx, double ny);

  pen_phase m_phase = pen_phase::up;
  double m_nx = 0.0;
  double m_ny = 0.0;
};

enum class adc_channel : std::uint8_t
{
  x,
  y,
};

/// One 24-clock exchange on the ADC serial interface as seen on the data-out
/// line: 8 command clocks, one busy clock, 12 data bits MSB first, 3 pad
/// clocks.
struct spi_transaction
{
  static constexpr std::size_t clock_count = 24;
  static constexpr std::size_t busy_bit = 8;
  static constexpr std::size_t first_data_bit = 9;
  static constexpr std::size_t data_bits = 12;

  std::uint8_t control_byte = 0;
  std::array<std::uint8_t, clock_count> clocked_bits{};
  adc12 result;

  friend bool operator==(const spi_transaction&,
                         const spi_transaction&) = default;
};

inline constexpr std::uint8_t control_byte_x = 0xD0;
inline constexpr std::uint8_t control_byte_y = 0x90;

[[nodiscard]] constexpr std::uint8_t control_byte_for(adc_channel channel)
{
  return channel == adc_channel::x ? control_byte_x : control_byte_y;
}

/// A committed coordinate sample. With the pen up, x and y keep the last
/// valid conversion.
struct touch_sample
{
  bool pen_down = false;
  adc12 x;
  adc12 y;
  std::uint64_t seq = 0;

  friend bool operator==(const touch_sample&, const touch_sample&) = default;
};

/// floor(n * 4096) clamped to 4095. `n` is clamped to [0, 1] first.
[[nodiscard]] adc12 quantize(double n);

[[nodiscard]] spi_transaction serialize_conversion(adc12 code,
                                                   adc_channel channel);

/// Reassembles the data bits. Throws malformed_transaction when the busy
/// clock or the pad clocks are not zero.
[[nodiscard]] adc12 deserialize_conversion(const spi_transaction& transaction);

/// Runs one X and one Y conversion for pen-down inputs. `previous` supplies
/// the sequence counter and the codes retained on pen-up; pass nullopt for
/// the first sample after reset.
[[nodiscard]] touch_sample sample_pen(
  const pen_input& input,
  const std::optional<touch_sample>& previous);

/// Stateful master-side controller: owns the sample counter and the
/// hold-last-conversion registers.
class touch_controller
{
public:
  touch_sample sample(const pen_input& input);
  /// Zeroes the held codes. The sequence counter keeps counting so samples
  /// stay strictly ordered across power cycles.
  void reset() noexcept;

  [[nodiscard]] const std::optional<touch_sample>& last() const noexcept
  {
    return m_last;
  }

  friend bool operator==(const touch_controller&,
                         const touch_controller&) = default;

private:
  std::optional<touch_sample> m_last;
};

}  // namespace touchboard

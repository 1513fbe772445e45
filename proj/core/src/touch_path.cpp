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


#include <touchboard/touch_path.hpp>

#include <touchboard/errors.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace touchboard {

adc12::adc12(std::uint32_t code)
  : m_code(static_cast<std::uint16_t>(code))
{
  if (code > max_code) {
    throw std::out_of_range("adc12 code " + std::to_string(code) +
                            " exceeds 4095");
  }
}

namespace {

double clamp_unit(double v)
{
  if (std::isnan(v)) {
    return 0.0;
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

pen_input::pen_input(pen_phase phase, double nx, double ny)
  : m_phase(phase)
  , m_nx(clamp_unit(nx))
  , m_ny(clamp_unit(ny))
{
}

pen_input pen_input::down(double nx, double ny)
{
  return { pen_phase::down, nx, ny };
}

pen_input pen_input::move(double nx, double ny)
{
  return { pen_phase::move, nx, ny };
}

pen_input pen_input::up()
{
  return { pen_phase::up, 0.0, 0.0 };
}

adc12 quantize(double n)
{
  const double clamped = clamp_unit(n);
  // n * 4096 is exact in binary floating point, so floor() is exact too.
  const auto level = static_cast<std::uint32_t>(std::floor(clamped * adc12::levels));
  return adc12{ std::min<std::uint32_t>(level, adc12::max_code) };
}

spi_transaction serialize_conversion(adc12 code, adc_channel channel)
{
  spi_transaction t;
  t.control_byte = control_byte_for(channel);
  t.result = code;
  // Command phase: the converter drives nothing, the line reads low.
  for (std::size_t bit = 0; bit < spi_transaction::data_bits; ++bit) {
    const auto shift = spi_transaction::data_bits - 1 - bit;
    t.clocked_bits[spi_transaction::first_data_bit + bit] =
      static_cast<std::uint8_t>((code.code() >> shift) & 1U);
  }
  return t;
}

adc12 deserialize_conversion(const spi_transaction& transaction)
{
  const auto& bits = transaction.clocked_bits;
  if (bits[spi_transaction::busy_bit] != 0) {
    throw malformed_transaction("busy clock is high");
  }
  constexpr auto pad_begin =
    spi_transaction::first_data_bit + spi_transaction::data_bits;
  for (auto i = pad_begin; i < spi_transaction::clock_count; ++i) {
    if (bits[i] != 0) {
      throw malformed_transaction("pad clock " + std::to_string(i) +
                                  " is high");
    }
  }
  std::uint32_t value = 0;
  for (std::size_t bit = 0; bit < spi_transaction::data_bits; ++bit) {
    const auto level = bits[spi_transaction::first_data_bit + bit];
    if (level > 1) {
      throw malformed_transaction("data clock carries a non-binary level");
    }
    value = (value << 1U) | level;
  }
  return adc12{ value };
}

touch_sample sample_pen(const pen_input& input,
                        const std::optional<touch_sample>& previous)
{
  touch_sample out;
  out.seq = (previous ? previous->seq : 0) + 1;
  if (input.has_position()) {
    out.pen_down = true;
    out.x = deserialize_conversion(
      serialize_conversion(quantize(input.nx()), adc_channel::x));
    out.y = deserialize_conversion(
      serialize_conversion(quantize(input.ny()), adc_channel::y));
  } else if (previous) {
    out.x = previous->x;
    out.y = previous->y;
  }
  return out;
}

touch_sample touch_controller::sample(const pen_input& input)
{
  m_last = sample_pen(input, m_last);
  return *m_last;
}

void touch_controller::reset() noexcept
{
  if (m_last) {
    m_last = touch_sample{ .pen_down = false, .x = {}, .y = {}, .seq = m_last->seq };
  }
}

}  // namespace touchboard

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


#include <touchboard/sevenseg.hpp>

#include <touchboard/errors.hpp>

#include <stdexcept>
#include <string>

namespace touchboard {

seg_pattern::seg_pattern(std::uint32_t bits)
  : m_bits(static_cast<std::uint8_t>(bits))
{
  if (bits > 0x7FU) {
    throw std::out_of_range("segment pattern uses more than 7 bits");
  }
}

seg_pattern encode_hex_digit(std::uint32_t d)
{
  if (d >= hex_segment_map.size()) {
    throw digit_out_of_range("digit " + std::to_string(d) +
                             " is not a hex digit");
  }
  return seg_pattern{ hex_segment_map[d] };
}

std::optional<std::uint8_t> decode_hex_digit(seg_pattern p)
{
  for (std::size_t d = 0; d < hex_segment_map.size(); ++d) {
    if (hex_segment_map[d] == p.bits()) {
      return static_cast<std::uint8_t>(d);
    }
  }
  return std::nullopt;
}

std::array<std::uint8_t, 6> digit_bank::packed() const noexcept
{
  return { x_digits[0].bits(), x_digits[1].bits(), x_digits[2].bits(),
           y_digits[0].bits(), y_digits[1].bits(), y_digits[2].bits() };
}

namespace {

std::array<seg_pattern, 3> encode_code(adc12 value)
{
  const std::uint32_t code = value.code();
  return { encode_hex_digit((code >> 8U) & 0xFU),
           encode_hex_digit((code >> 4U) & 0xFU),
           encode_hex_digit(code & 0xFU) };
}

}  // namespace

digit_bank display_sample(const touch_sample& s)
{
  return { encode_code(s.x), encode_code(s.y) };
}

digit_bank zero_bank()
{
  return display_sample(touch_sample{});
}

std::string readout(const digit_bank& bank)
{
  static constexpr char glyphs[] = "0123456789ABCDEF";
  std::string out;
  auto append = [&](const std::array<seg_pattern, 3>& digits) {
    for (const auto p : digits) {
      const auto d = decode_hex_digit(p);
      out.push_back(d ? glyphs[*d] : '?');
    }
  };
  append(bank.x_digits);
  out.push_back(' ');
  append(bank.y_digits);
  return out;
}

}  // namespace touchboard

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

#include <touchboard/touch_path.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace touchboard {

/// Seven segments packed bit0 = a ... bit6 = g.
class seg_pattern
{
public:
  constexpr seg_pattern() = default;
  /// Throws std::out_of_range above 0x7F.
  explicit seg_pattern(std::uint32_t bits);

  [[nodiscard]] constexpr std::uint8_t bits() const noexcept { return m_bits; }
  /// Segment 0..6 (a..g).
  [[nodiscard]] constexpr bool lit(int segment) const noexcept
  {
    return ((m_bits >> segment) & 1U) != 0;
  }

  friend constexpr bool operator==(seg_pattern, seg_pattern) = default;

private:
  std::uint8_t m_bits = 0;
};

/// Common-cathode hex font, index = digit value.
inline constexpr std::array<std::uint8_t, 16> hex_segment_map{
  0x3F, 0x06, 0x5B, 0x4F, 0x66, 0x6D, 0x7D, 0x07,
  0x7F, 0x6F, 0x77, 0x7C, 0x39, 0x5E, 0x79, 0x71,
};

/// Throws digit_out_of_range for d > 15.
[[nodiscard]] seg_pattern encode_hex_digit(std::uint32_t d);

/// Inverse of encode_hex_digit; nullopt for patterns outside the font.
[[nodiscard]] std::optional<std::uint8_t> decode_hex_digit(seg_pattern p);

/// Two banks of three digits, most significant first.
struct digit_bank
{
  std::array<seg_pattern, 3> x_digits{};
  std::array<seg_pattern, 3> y_digits{};

  /// x digits then y digits, one byte per digit.
  [[nodiscard]] std::array<std::uint8_t, 6> packed() const noexcept;

  friend bool operator==(const digit_bank&, const digit_bank&) = default;
};

[[nodiscard]] digit_bank display_sample(const touch_sample& s);

/// Bank showing 000 / 000.
[[nodiscard]] digit_bank zero_bank();

/// "XXX YYY" decoded back from the segment patterns; '?' for a pattern that
/// is not a hex glyph.
[[nodiscard]] std::string readout(const digit_bank& bank);

}  // namespace touchboard

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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace touchboard {

struct rgb24
{
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(rgb24, rgb24) = default;
};

inline constexpr rgb24 background_color{ 255, 255, 255 };

/// Panel resolution of the display half of the touch module.
inline constexpr int panel_width = 800;
inline constexpr int panel_height = 400;

struct pixel
{
  int col = 0;
  int row = 0;

  friend constexpr bool operator==(pixel, pixel) = default;
  friend constexpr auto operator<=>(pixel, pixel) = default;
};

enum class pen_mode : std::uint8_t
{
  draw,
  erase,
  draw_bold,
  erase_bold,
};

enum class pen_color : std::uint8_t
{
  red,
  blue,
};

[[nodiscard]] constexpr rgb24 to_rgb(pen_color color)
{
  return color == pen_color::red ? rgb24{ 255, 0, 0 } : rgb24{ 0, 0, 255 };
}

[[nodiscard]] constexpr bool is_erase(pen_mode mode)
{
  return mode == pen_mode::erase || mode == pen_mode::erase_bold;
}

/// Side length of the square brush for a mode: 3 normal, 7 bold.
[[nodiscard]] constexpr int kernel_size(pen_mode mode)
{
  return (mode == pen_mode::draw_bold || mode == pen_mode::erase_bold) ? 7 : 3;
}

[[nodiscard]] std::string_view to_string(pen_mode mode);
[[nodiscard]] std::string_view to_string(pen_color color);

/// Row-major packed RGB image, top row first. Freshly constructed and
/// cleared framebuffers are uniformly background_color.
class framebuffer
{
public:
  framebuffer();
  framebuffer(int width, int height);

  [[nodiscard]] int width() const noexcept { return m_width; }
  [[nodiscard]] int height() const noexcept { return m_height; }

  [[nodiscard]] bool contains(int col, int row) const noexcept
  {
    return col >= 0 && row >= 0 && col < m_width && row < m_height;
  }

  /// Bounds-checked; throws std::out_of_range.
  [[nodiscard]] rgb24 at(int col, int row) const;
  void set(int col, int row, rgb24 color);

  void fill(rgb24 color) noexcept;

  [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept
  {
    return m_rgb;
  }

  [[nodiscard]] std::uint64_t content_hash() const noexcept;

  friend bool operator==(const framebuffer&, const framebuffer&) = default;

private:
  [[nodiscard]] std::size_t offset(int col, int row) const;

  int m_width;
  int m_height;
  std::vector<std::uint8_t> m_rgb;
};

/// Throws pen_up_error for a pen-up sample.
[[nodiscard]] pixel map_to_pixel(const touch_sample& s);

/// Integer line from a to b inclusive, a first and b last, 8-connected.
/// Ties on the minor axis round away from a.
[[nodiscard]] std::vector<pixel> line_pixels(pixel a, pixel b);

/// Square brush centred on p, clipped to the framebuffer.
void stamp(framebuffer& fb, pixel p, pen_mode mode, pen_color color);

/// Stamps at cur alone when there is no pen-down predecessor, otherwise
/// along the line from prev to cur. Throws pen_up_error if cur is pen-up.
void apply_stroke_step(framebuffer& fb,
                       const std::optional<touch_sample>& prev,
                       const touch_sample& cur,
                       pen_mode mode,
                       pen_color color);

void clear(framebuffer& fb) noexcept;

}  // namespace touchboard

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


#include <touchboard/render.hpp>

#include <touchboard/errors.hpp>
#include <touchboard/hash.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace touchboard {

std::string_view to_string(pen_mode mode)
{
  switch (mode) {
    case pen_mode::draw:
      return "draw";
    case pen_mode::erase:
      return "erase";
    case pen_mode::draw_bold:
      return "draw-bold";
    case pen_mode::erase_bold:
      return "erase-bold";
  }
  return "unknown";
}

std::string_view to_string(pen_color color)
{
  return color == pen_color::red ? "red" : "blue";
}

framebuffer::framebuffer()
  : framebuffer(panel_width, panel_height)
{
}

framebuffer::framebuffer(int width, int height)
  : m_width(width)
  , m_height(height)
{
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("framebuffer dimensions must be positive");
  }
  m_rgb.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3U);
  fill(background_color);
}

std::size_t framebuffer::offset(int col, int row) const
{
  if (!contains(col, row)) {
    throw std::out_of_range("pixel (" + std::to_string(col) + ", " +
                            std::to_string(row) + ") outside framebuffer");
  }
  return (static_cast<std::size_t>(row) * static_cast<std::size_t>(m_width) +
          static_cast<std::size_t>(col)) *
         3U;
}

rgb24 framebuffer::at(int col, int row) const
{
  const auto i = offset(col, row);
  return { m_rgb[i], m_rgb[i + 1], m_rgb[i + 2] };
}

void framebuffer::set(int col, int row, rgb24 color)
{
  const auto i = offset(col, row);
  m_rgb[i] = color.r;
  m_rgb[i + 1] = color.g;
  m_rgb[i + 2] = color.b;
}

void framebuffer::fill(rgb24 color) noexcept
{
  for (std::size_t i = 0; i < m_rgb.size(); i += 3) {
    m_rgb[i] = color.r;
    m_rgb[i + 1] = color.g;
    m_rgb[i + 2] = color.b;
  }
}

std::uint64_t framebuffer::content_hash() const noexcept
{
  fnv1a64 h;
  h.update_u64(static_cast<std::uint64_t>(m_width));
  h.update_u64(static_cast<std::uint64_t>(m_height));
  h.update(m_rgb);
  return h.digest();
}

pixel map_to_pixel(const touch_sample& s)
{
  if (!s.pen_down) {
    throw pen_up_error("cannot map a pen-up sample to a pixel");
  }
  return { static_cast<int>(std::uint32_t{ s.x.code() } * panel_width / adc12::levels),
           static_cast<int>(std::uint32_t{ s.y.code() } * panel_height / adc12::levels) };
}

std::vector<pixel> line_pixels(pixel a, pixel b)
{
  const int dx = std::abs(b.col - a.col);
  const int dy = std::abs(b.row - a.row);
  const int sx = b.col >= a.col ? 1 : -1;
  const int sy = b.row >= a.row ? 1 : -1;
  const bool x_major = dx >= dy;
  const int major = x_major ? dx : dy;
  const int minor = x_major ? dy : dx;

  std::vector<pixel> out;
  out.reserve(static_cast<std::size_t>(major) + 1);

  // Midpoint decision variable; D >= 0 means the ideal minor coordinate of
  // the next step is at or past the half-way mark.
  int decision = 2 * minor - major;
  int col = a.col;
  int row = a.row;
  for (int i = 0; i <= major; ++i) {
    out.push_back({ col, row });
    if (decision >= 0) {
      if (x_major) {
        row += sy;
      } else {
        col += sx;
      }
      decision -= 2 * major;
    }
    decision += 2 * minor;
    if (x_major) {
      col += sx;
    } else {
      row += sy;
    }
  }
  return out;
}

void stamp(framebuffer& fb, pixel p, pen_mode mode, pen_color color)
{
  const int half = kernel_size(mode) / 2;
  const rgb24 ink = is_erase(mode) ? background_color : to_rgb(color);
  const int col_lo = std::max(0, p.col - half);
  const int col_hi = std::min(fb.width() - 1, p.col + half);
  const int row_lo = std::max(0, p.row - half);
  const int row_hi = std::min(fb.height() - 1, p.row + half);
  for (int row = row_lo; row <= row_hi; ++row) {
    for (int col = col_lo; col <= col_hi; ++col) {
      fb.set(col, row, ink);
    }
  }
}

void apply_stroke_step(framebuffer& fb,
                       const std::optional<touch_sample>& prev,
                       const touch_sample& cur,
                       pen_mode mode,
                       pen_color color)
{
  const pixel to = map_to_pixel(cur);
  if (!prev || !prev->pen_down) {
    stamp(fb, to, mode, color);
    return;
  }
  for (const auto p : line_pixels(map_to_pixel(*prev), to)) {
    stamp(fb, p, mode, color);
  }
}

void clear(framebuffer& fb) noexcept
{
  fb.fill(background_color);
}

}  // namespace touchboard

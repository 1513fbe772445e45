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


#include <touchboard/errors.hpp>
#include <touchboard/render.hpp>

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

using namespace touchboard;

namespace {

// Reference rasterizer: step along the major axis and round the exact
// rational minor offset, ties moving away from the start point.
std::vector<pixel> dda_oracle(pixel a, pixel b)
{
  const long dx = b.col - a.col;
  const long dy = b.row - a.row;
  const long adx = std::labs(dx);
  const long ady = std::labs(dy);
  const long sx = dx < 0 ? -1 : 1;
  const long sy = dy < 0 ? -1 : 1;
  std::vector<pixel> out;
  if (adx == 0 && ady == 0) {
    out.push_back(a);
    return out;
  }
  const long major = std::max(adx, ady);
  const long minor = std::min(adx, ady);
  for (long i = 0; i <= major; ++i) {
    // round(i * minor / major) with .5 rounding up: floor((2*i*minor + major) / (2*major))
    const long off = (2 * i * minor + major) / (2 * major);
    if (adx >= ady) {
      out.push_back({ a.col + static_cast<int>(sx * i), a.row + static_cast<int>(sy * off) });
    } else {
      out.push_back({ a.col + static_cast<int>(sx * off), a.row + static_cast<int>(sy * i) });
    }
  }
  return out;
}

std::size_t count_colored(const framebuffer& fb)
{
  std::size_t n = 0;
  for (int r = 0; r < fb.height(); ++r) {
    for (int c = 0; c < fb.width(); ++c) {
      if (fb.at(c, r) != background_color) {
        ++n;
      }
    }
  }
  return n;
}

touch_sample pen_at(std::uint32_t x, std::uint32_t y, std::uint64_t seq = 1)
{
  return touch_sample{ true, adc12{ x }, adc12{ y }, seq };
}

}  // namespace

TEST_CASE("map_to_pixel")
{
  CHECK(map_to_pixel(pen_at(0, 0)) == pixel{ 0, 0 });
  CHECK(map_to_pixel(pen_at(4095, 4095)) == pixel{ 799, 399 });
  CHECK(map_to_pixel(pen_at(2048, 2048)) == pixel{ 400, 200 });
  CHECK_THROWS_AS((void)map_to_pixel(touch_sample{ false, adc12{ 5 }, adc12{ 5 }, 1 }),
                  pen_up_error);

  for (std::uint32_t c = 0; c <= 4095; ++c) {
    const auto p = map_to_pixel(pen_at(c, c));
    REQUIRE(p.col == static_cast<int>(c * 800 / 4096));
    REQUIRE(p.row == static_cast<int>(c * 400 / 4096));
    REQUIRE(p.col < panel_width);
    REQUIRE(p.row < panel_height);
  }
}

TEST_CASE("line_pixels")
{
  const std::vector<pixel> expected{ { 0, 0 }, { 1, 1 }, { 2, 1 }, { 3, 2 }, { 4, 2 } };
  CHECK(line_pixels({ 0, 0 }, { 4, 2 }) == expected);
  CHECK(dda_oracle({ 0, 0 }, { 4, 2 }) == expected);
  CHECK(line_pixels({ 3, 3 }, { 3, 3 }) == std::vector<pixel>{ { 3, 3 } });

  SUBCASE("agrees with the DDA oracle in every octant")
  {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> col(0, 799);
    std::uniform_int_distribution<int> row(0, 399);
    for (int i = 0; i < 5000; ++i) {
      const pixel a{ col(rng), row(rng) };
      const pixel b{ col(rng), row(rng) };
      REQUIRE(line_pixels(a, b) == dda_oracle(a, b));
    }
    for (int dx = -6; dx <= 6; ++dx) {
      for (int dy = -6; dy <= 6; ++dy) {
        REQUIRE(line_pixels({ 10, 10 }, { 10 + dx, 10 + dy }) ==
                dda_oracle({ 10, 10 }, { 10 + dx, 10 + dy }));
      }
    }
  }

  SUBCASE("endpoints, 8-connectivity, one pixel per major step")
  {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> col(0, 799);
    std::uniform_int_distribution<int> row(0, 399);
    for (int i = 0; i < 2000; ++i) {
      const pixel a{ col(rng), row(rng) };
      const pixel b{ col(rng), row(rng) };
      const auto line = line_pixels(a, b);
      REQUIRE(line.front() == a);
      REQUIRE(line.back() == b);
      const auto major = std::max(std::abs(b.col - a.col), std::abs(b.row - a.row));
      REQUIRE(line.size() == static_cast<std::size_t>(major) + 1);
      for (std::size_t j = 1; j < line.size(); ++j) {
        REQUIRE(std::abs(line[j].col - line[j - 1].col) <= 1);
        REQUIRE(std::abs(line[j].row - line[j - 1].row) <= 1);
      }
    }
  }
}

TEST_CASE("stamp matches a naive clipped-square count")
{
  std::mt19937_64 rng(13);
  const std::vector<pixel> centers{ { 0, 0 },     { 799, 399 }, { 0, 399 }, { 799, 0 },
                                    { 1, 1 },     { 2, 3 },     { 400, 200 }, { 798, 5 } };
  for (const auto mode : { pen_mode::draw, pen_mode::draw_bold }) {
    for (const auto p : centers) {
      framebuffer fb;
      stamp(fb, p, mode, pen_color::blue);
      const int h = kernel_size(mode) / 2;
      std::size_t expected = 0;
      for (int r = 0; r < panel_height; ++r) {
        for (int c = 0; c < panel_width; ++c) {
          const bool in = std::abs(c - p.col) <= h && std::abs(r - p.row) <= h;
          if (in) {
            ++expected;
            REQUIRE(fb.at(c, r) == to_rgb(pen_color::blue));
          }
        }
      }
      REQUIRE(count_colored(fb) == expected);
    }
  }

  framebuffer fb;
  stamp(fb, { 0, 0 }, pen_mode::draw_bold, pen_color::red);
  CHECK(count_colored(fb) == 16);
}

TEST_CASE("erase modes write the background")
{
  framebuffer fb;
  fb.fill(rgb24{ 1, 2, 3 });
  stamp(fb, { 50, 50 }, pen_mode::erase, pen_color::red);
  CHECK(fb.at(50, 50) == background_color);
  CHECK(fb.at(51, 51) == background_color);
  CHECK(fb.at(52, 52) == rgb24{ 1, 2, 3 });
  stamp(fb, { 100, 100 }, pen_mode::erase_bold, pen_color::blue);
  CHECK(fb.at(103, 97) == background_color);
  CHECK(fb.at(104, 100) == rgb24{ 1, 2, 3 });
}

TEST_CASE("apply_stroke_step")
{
  SUBCASE("first sample stamps a single point")
  {
    framebuffer fb;
    apply_stroke_step(fb, std::nullopt, pen_at(2048, 2048), pen_mode::draw, pen_color::red);
    CHECK(count_colored(fb) == 9);
    CHECK(fb.at(400, 200) == to_rgb(pen_color::red));
  }

  SUBCASE("previous pen-up sample starts a new stroke")
  {
    framebuffer fb;
    const touch_sample up{ false, adc12{ 0 }, adc12{ 0 }, 1 };
    apply_stroke_step(fb, up, pen_at(2048, 2048, 2), pen_mode::draw, pen_color::red);
    CHECK(count_colored(fb) == 9);
  }

  SUBCASE("connected samples draw the joining segment")
  {
    framebuffer fb;
    const auto a = pen_at(0, 2048, 1);
    const auto b = pen_at(4095, 2048, 2);
    apply_stroke_step(fb, a, b, pen_mode::draw, pen_color::blue);
    // Horizontal line across the whole width, 3 rows thick.
    CHECK(count_colored(fb) == 800 * 3);
  }

  SUBCASE("pen-up current sample is rejected")
  {
    framebuffer fb;
    CHECK_THROWS_AS(apply_stroke_step(fb, pen_at(1, 1), touch_sample{ false, adc12{}, adc12{}, 2 },
                                      pen_mode::draw, pen_color::red),
                    pen_up_error);
    CHECK(count_colored(fb) == 0);
  }
}

TEST_CASE("draw then erase of the same stroke restores the canvas")
{
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint32_t> code(0, 4095);
  for (int trial = 0; trial < 30; ++trial) {
    for (const auto [draw, erase] :
         { std::pair{ pen_mode::draw, pen_mode::erase },
           std::pair{ pen_mode::draw_bold, pen_mode::erase_bold } }) {
      framebuffer fb;
      const auto blank = fb.content_hash();
      std::vector<touch_sample> stroke;
      for (std::uint64_t i = 0; i < 6; ++i) {
        stroke.push_back(pen_at(code(rng), code(rng), i + 1));
      }
      for (const auto mode : { draw, erase }) {
        std::optional<touch_sample> prev;
        for (const auto& s : stroke) {
          apply_stroke_step(fb, prev, s, mode, pen_color::red);
          prev = s;
        }
        if (mode == draw) {
          REQUIRE(fb.content_hash() != blank);
        }
      }
      REQUIRE(fb.content_hash() == blank);
    }
  }
}

TEST_CASE("framebuffer bounds and clear")
{
  framebuffer fb;
  CHECK(fb.width() == 800);
  CHECK(fb.height() == 400);
  CHECK(fb.bytes().size() == 800U * 400U * 3U);
  CHECK_THROWS_AS((void)fb.at(800, 0), std::out_of_range);
  CHECK_THROWS_AS(fb.set(0, -1, rgb24{}), std::out_of_range);
  const auto blank = fb.content_hash();
  fb.set(10, 10, rgb24{ 0, 0, 0 });
  CHECK(fb.content_hash() != blank);
  clear(fb);
  CHECK(fb.content_hash() == blank);
  CHECK(fb == framebuffer{});
}

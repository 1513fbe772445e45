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


#include <touchboard/video_out.hpp>

#include <touchboard/errors.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace touchboard {

namespace {

void require_positive(int value, const char* name)
{
  if (value <= 0) {
    throw std::invalid_argument(std::string("vga timing field ") + name +
                                " must be positive");
  }
}

void validate_axis(const vga_axis_timing& axis, const char* prefix)
{
  const std::string p(prefix);
  require_positive(axis.active, (p + ".active").c_str());
  require_positive(axis.front_porch, (p + ".front_porch").c_str());
  require_positive(axis.sync_pulse, (p + ".sync_pulse").c_str());
  require_positive(axis.back_porch, (p + ".back_porch").c_str());
}

}  // namespace

void vga_timing_params::validate() const
{
  validate_axis(horizontal, "horizontal");
  validate_axis(vertical, "vertical");
  if (pixel_clock_hz == 0) {
    throw std::invalid_argument("pixel clock must be positive");
  }
}

double refresh_hz(const vga_timing_params& params)
{
  return static_cast<double>(params.pixel_clock_hz) /
         static_cast<double>(params.ticks_per_frame());
}

letterbox letterbox_for(const framebuffer& fb, const vga_timing_params& params)
{
  if (fb.width() != panel_width || fb.height() != panel_height) {
    throw dimension_mismatch("framebuffer is " + std::to_string(fb.width()) +
                             "x" + std::to_string(fb.height()) +
                             ", expected 800x400");
  }
  const int spare_w = params.horizontal.active - fb.width();
  const int spare_h = params.vertical.active - fb.height();
  if (spare_w < 0 || spare_h < 0) {
    throw std::invalid_argument("active region smaller than the panel image");
  }
  return { spare_w / 2, spare_h / 2 };
}

vga_tick tick_at(int h_count,
                 int v_count,
                 const vga_timing_params& params,
                 const framebuffer* source)
{
  vga_tick t;
  t.h_count = h_count;
  t.v_count = v_count;
  t.hsync = params.horizontal.in_sync(h_count);
  t.vsync = params.vertical.in_sync(v_count);
  t.active = h_count < params.horizontal.active && v_count < params.vertical.active;
  if (t.active) {
    rgb24 color = background_color;
    if (source != nullptr) {
      const auto box = letterbox_for(*source, params);
      const int col = h_count - box.left;
      const int row = v_count - box.top;
      if (source->contains(col, row)) {
        color = source->at(col, row);
      }
    }
    t.pixel = color;
  }
  return t;
}

vga_tick origin_tick(const vga_timing_params& params, const framebuffer* source)
{
  return tick_at(0, 0, params, source);
}

vga_tick advance(const vga_tick& t,
                 const vga_timing_params& params,
                 const framebuffer* source)
{
  int h = t.h_count + 1;
  int v = t.v_count;
  if (h == params.h_total()) {
    h = 0;
    v = (v + 1) % params.v_total();
  }
  return tick_at(h, v, params, source);
}

std::vector<vga_tick> compose_frame(const framebuffer& fb,
                                    const vga_timing_params& params)
{
  params.validate();
  const auto box = letterbox_for(fb, params);
  std::vector<vga_tick> out;
  out.reserve(params.ticks_per_frame());
  // Same stepping as advance(), with the letterbox lookup hoisted.
  for (int v = 0; v < params.v_total(); ++v) {
    for (int h = 0; h < params.h_total(); ++h) {
      vga_tick t = tick_at(h, v, params);
      if (t.active) {
        const int col = h - box.left;
        const int row = v - box.top;
        if (fb.contains(col, row)) {
          t.pixel = fb.at(col, row);
        }
      }
      out.push_back(t);
    }
  }
  return out;
}

frame_timing_stats measure_ticks(const std::vector<vga_tick>& ticks)
{
  frame_timing_stats stats;
  bool prev_h = false;
  bool prev_v = false;
  for (const auto& t : ticks) {
    ++stats.ticks;
    if (t.hsync && !prev_h) {
      ++stats.hsync_pulses;
    }
    if (t.vsync && !prev_v) {
      ++stats.vsync_pulses;
    }
    if (t.pixel) {
      ++stats.active_pixels;
    }
    prev_h = t.hsync;
    prev_v = t.vsync;
  }
  return stats;
}

frame_timing_stats measure_frames(std::uint64_t frames,
                                  const vga_timing_params& params)
{
  params.validate();
  frame_timing_stats stats;
  vga_tick t = origin_tick(params);
  bool prev_h = false;
  bool prev_v = false;
  const auto total = frames * params.ticks_per_frame();
  for (std::uint64_t i = 0; i < total; ++i) {
    ++stats.ticks;
    if (t.hsync && !prev_h) {
      ++stats.hsync_pulses;
    }
    if (t.vsync && !prev_v) {
      ++stats.vsync_pulses;
    }
    if (t.active) {
      ++stats.active_pixels;
    }
    prev_h = t.hsync;
    prev_v = t.vsync;
    t = advance(t, params);
  }
  return stats;
}

framebuffer active_image(const framebuffer& fb, const vga_timing_params& params)
{
  const auto box = letterbox_for(fb, params);
  framebuffer out(params.horizontal.active, params.vertical.active);
  for (int row = 0; row < fb.height(); ++row) {
    for (int col = 0; col < fb.width(); ++col) {
      out.set(col + box.left, row + box.top, fb.at(col, row));
    }
  }
  return out;
}

std::vector<std::uint8_t> export_ppm(const framebuffer& fb)
{
  const std::string header = "P6\n" + std::to_string(fb.width()) + " " +
                             std::to_string(fb.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto body = fb.bytes();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

framebuffer import_ppm(const std::vector<std::uint8_t>& bytes)
{
  std::size_t pos = 0;
  auto next_token = [&]() {
    while (pos < bytes.size() && std::isspace(bytes[pos]) != 0) {
      ++pos;
    }
    std::string token;
    while (pos < bytes.size() && std::isspace(bytes[pos]) == 0) {
      token.push_back(static_cast<char>(bytes[pos++]));
    }
    return token;
  };
  if (next_token() != "P6") {
    throw std::invalid_argument("not a binary PPM (P6) image");
  }
  int width = 0;
  int height = 0;
  int maxval = 0;
  try {
    width = std::stoi(next_token());
    height = std::stoi(next_token());
    maxval = std::stoi(next_token());
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed PPM header");
  }
  if (maxval != 255) {
    throw std::invalid_argument("only maxval 255 is supported");
  }
  ++pos;  // single whitespace byte before the raster
  framebuffer fb(width, height);
  const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3U;
  if (bytes.size() < pos || bytes.size() - pos != expected) {
    throw std::invalid_argument("PPM raster size does not match header");
  }
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      const auto i = pos + (static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                            static_cast<std::size_t>(col)) * 3U;
      fb.set(col, row, { bytes[i], bytes[i + 1], bytes[i + 2] });
    }
  }
  return fb;
}

void write_ppm(const std::filesystem::path& path, const framebuffer& fb)
{
  const auto bytes = export_ppm(fb);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::string timing_report(std::uint64_t frames, const vga_timing_params& params)
{
  if (frames == 0) {
    throw std::invalid_argument("frames must be at least 1");
  }
  const auto stats = measure_frames(frames, params);
  char refresh[32];
  std::snprintf(refresh, sizeof refresh, "%.2f", refresh_hz(params));
  std::ostringstream os;
  os << "mode: " << params.horizontal.active << "x" << params.vertical.active
     << " total " << params.h_total() << "x" << params.v_total() << " @ "
     << params.pixel_clock_hz << " Hz pixel clock\n"
     << "frames: " << frames << "\n"
     << "ticks: " << stats.ticks << "\n"
     << "ticks_per_frame: " << params.ticks_per_frame() << "\n"
     << "hsync_pulses: " << stats.hsync_pulses << "\n"
     << "vsync_pulses: " << stats.vsync_pulses << "\n"
     << "active_pixels: " << stats.active_pixels << "\n"
     << "refresh_hz: " << refresh << "\n";
  return os.str();
}

}  // namespace touchboard

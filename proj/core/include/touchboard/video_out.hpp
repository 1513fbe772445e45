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

#include <touchboard/render.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace touchboard {

struct vga_axis_timing
{
  int active = 0;
  int front_porch = 0;
  int sync_pulse = 0;
  int back_porch = 0;

  [[nodiscard]] constexpr int total() const noexcept
  {
    return active + front_porch + sync_pulse + back_porch;
  }
  [[nodiscard]] constexpr int sync_start() const noexcept
  {
    return active + front_porch;
  }
  [[nodiscard]] constexpr int sync_end() const noexcept
  {
    return sync_start() + sync_pulse;
  }
  [[nodiscard]] constexpr bool in_sync(int count) const noexcept
  {
    return count >= sync_start() && count < sync_end();
  }

  friend constexpr bool operator==(const vga_axis_timing&,
                                   const vga_axis_timing&) = default;
};

/// Defaults to VESA 800x600 @ 60 Hz on a 40 MHz pixel clock.
struct vga_timing_params
{
  vga_axis_timing horizontal{ 800, 40, 128, 88 };
  vga_axis_timing vertical{ 600, 1, 4, 23 };
  std::uint64_t pixel_clock_hz = 40'000'000;

  [[nodiscard]] constexpr int h_total() const noexcept
  {
    return horizontal.total();
  }
  [[nodiscard]] constexpr int v_total() const noexcept
  {
    return vertical.total();
  }
  [[nodiscard]] constexpr std::uint64_t ticks_per_frame() const noexcept
  {
    return static_cast<std::uint64_t>(h_total()) *
           static_cast<std::uint64_t>(v_total());
  }

  /// Throws std::invalid_argument if any count or the clock is not positive.
  void validate() const;
};

[[nodiscard]] double refresh_hz(const vga_timing_params& params);

/// One pixel-clock slot of the video signal. `pixel` is set exactly when
/// the beam is in the active region.
struct vga_tick
{
  int h_count = 0;
  int v_count = 0;
  bool hsync = false;
  bool vsync = false;
  bool active = false;
  std::optional<rgb24> pixel;

  friend bool operator==(const vga_tick&, const vga_tick&) = default;
};

/// Where the 800x400 panel image sits inside the 800x600 active region.
struct letterbox
{
  int left = 0;
  int top = 0;
};

/// Throws dimension_mismatch unless fb is 800x400, and invalid_argument if
/// the active region cannot hold the image.
[[nodiscard]] letterbox letterbox_for(const framebuffer& fb,
                                      const vga_timing_params& params);

/// Signal state at a beam position. Active pixels come from `source`
/// (letterboxed) or are background when no source is given.
[[nodiscard]] vga_tick tick_at(int h_count,
                               int v_count,
                               const vga_timing_params& params,
                               const framebuffer* source = nullptr);

/// Beam origin (h = 0, v = 0) of a frame.
[[nodiscard]] vga_tick origin_tick(const vga_timing_params& params,
                                   const framebuffer* source = nullptr);

/// Next pixel clock: h wraps at h_total and carries into v, which wraps at
/// v_total.
[[nodiscard]] vga_tick advance(const vga_tick& t,
                               const vga_timing_params& params,
                               const framebuffer* source = nullptr);

/// Every tick of one frame in scan order, starting at the origin.
[[nodiscard]] std::vector<vga_tick> compose_frame(
  const framebuffer& fb,
  const vga_timing_params& params = {});

struct frame_timing_stats
{
  std::uint64_t ticks = 0;
  std::uint64_t hsync_pulses = 0;
  std::uint64_t vsync_pulses = 0;
  std::uint64_t active_pixels = 0;

  friend bool operator==(const frame_timing_stats&,
                         const frame_timing_stats&) = default;
};

/// Counts sync pulses (rising edges) and active pixels over whole frames by
/// stepping advance() from the origin.
[[nodiscard]] frame_timing_stats measure_frames(std::uint64_t frames,
                                                const vga_timing_params& params = {});

[[nodiscard]] frame_timing_stats measure_ticks(const std::vector<vga_tick>& ticks);

/// The full active region as an image, letterbox bands included.
[[nodiscard]] framebuffer active_image(const framebuffer& fb,
                                       const vga_timing_params& params = {});

/// Binary P6 image: "P6\n<w> <h>\n255\n" then packed RGB rows.
[[nodiscard]] std::vector<std::uint8_t> export_ppm(const framebuffer& fb);

/// Parses a P6 image with maxval 255 as written by export_ppm.
[[nodiscard]] framebuffer import_ppm(const std::vector<std::uint8_t>& bytes);

void write_ppm(const std::filesystem::path& path, const framebuffer& fb);

/// Plain-text report of tick, sync, and refresh figures for `frames` frames.
[[nodiscard]] std::string timing_report(std::uint64_t frames,
                                        const vga_timing_params& params = {});

}  // namespace touchboard

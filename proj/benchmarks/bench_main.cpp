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


#include <touchboard/device.hpp>
#include <touchboard/evalstats.hpp>
#include <touchboard/render.hpp>
#include <touchboard/touch_path.hpp>
#include <touchboard/video_out.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace touchboard;

namespace {

void bm_spi_round_trip(benchmark::State& state)
{
  std::uint32_t code = 0;
  for (auto _ : state) {
    const auto t = serialize_conversion(adc12{ code }, adc_channel::x);
    benchmark::DoNotOptimize(deserialize_conversion(t));
    code = (code + 1) & adc12::max_code;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_spi_round_trip);

void bm_vga_frame(benchmark::State& state)
{
  const framebuffer fb;
  for (auto _ : state) {
    auto ticks = compose_frame(fb);
    benchmark::DoNotOptimize(ticks.data());
  }
  state.SetItemsProcessed(state.iterations() * vga_timing_params{}.ticks_per_frame());
}
BENCHMARK(bm_vga_frame)->Unit(benchmark::kMillisecond);

void bm_vga_measure(benchmark::State& state)
{
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_frames(1));
  }
}
BENCHMARK(bm_vga_measure)->Unit(benchmark::kMillisecond);

void bm_stroke_step(benchmark::State& state)
{
  const auto mode = static_cast<pen_mode>(state.range(0));
  framebuffer fb;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> code(0, adc12::max_code);
  std::optional<touch_sample> prev;
  std::uint64_t seq = 0;
  for (auto _ : state) {
    const touch_sample cur{ true, adc12{ code(rng) }, adc12{ code(rng) }, ++seq };
    apply_stroke_step(fb, prev, cur, mode, pen_color::red);
    prev = cur;
  }
  benchmark::DoNotOptimize(fb.bytes().data());
}
BENCHMARK(bm_stroke_step)->Arg(0)->Arg(2);

void bm_device_step(benchmark::State& state)
{
  device d;
  d.press(button_id::power_adaptor);
  double x = 0.0;
  for (auto _ : state) {
    d.step(pen_input::move(x, 1.0 - x));
    x = x >= 1.0 ? 0.0 : x + 0.001;
  }
}
BENCHMARK(bm_device_step);

void bm_resample(benchmark::State& state)
{
  const auto d = evalstats::synthetic_discovery_matrix(60, 40, 0.3, 1);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evalstats::subgroup_resample(d, k, 1000, 7));
  }
}
BENCHMARK(bm_resample)->Arg(5)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

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

#include <touchboard/device.hpp>
#include <touchboard/errors.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

namespace touchboard::bridge {

inline constexpr std::uint16_t default_port = 8943;

struct server_options
{
  std::string address = "0.0.0.0";
  /// 0 picks an ephemeral port; see server::port().
  std::uint16_t port = default_port;
  /// Served at "/". Empty disables static files.
  std::filesystem::path static_dir;
  device_config device;
  /// Wall-clock length of one device tick.
  std::chrono::microseconds tick_period{ 5000 };
  /// Upper bound on Frame messages per second.
  unsigned max_fps = 30;
};

/// The listening socket could not be opened (typically: port in use).
class bind_error : public error
{
public:
  using error::error;
};

/// Hosts one shared simulated device behind a WebSocket endpoint (/ws),
/// a health probe (/healthz) and static UI files. Every connection handler
/// and the device itself run on a single I/O thread, which is the one
/// serialization point for device state.
class server
{
public:
  explicit server(server_options options);
  ~server();

  server(const server&) = delete;
  server& operator=(const server&) = delete;

  /// Binds and starts accepting. Throws bind_error.
  void listen();

  /// Runs the I/O loop on the calling thread until stop().
  void run();

  /// listen() + run() on an internal thread.
  void start_background();

  /// Thread-safe. Closes connections and returns once the loop exits (when
  /// it runs on the internal thread).
  void stop();

  [[nodiscard]] std::uint16_t port() const noexcept;

private:
  struct impl;
  std::unique_ptr<impl> m_impl;
};

}  // namespace touchboard::bridge

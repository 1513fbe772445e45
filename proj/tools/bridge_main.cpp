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


#include "cli.hpp"

#include <touchboard/bridge/server.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

namespace {

touchboard::bridge::server* g_server = nullptr;

extern "C" void on_signal(int)
{
  if (g_server != nullptr) {
    g_server->stop();
  }
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{ "touchboard-bridge: serve the simulated board over WebSocket" };
  touchboard::bridge::server_options options;
  std::string static_dir;
  app.add_option("--port", options.port, "TCP port")->capture_default_str();
  app.add_option("--address", options.address, "Listen address")->capture_default_str();
  app.add_option("--static-dir", static_dir, "Directory with the UI build served at /");
  app.add_option("--fps", options.max_fps, "Maximum frames per second")->capture_default_str()
    ->check(CLI::Range(1, 120));
  CLI11_PARSE(app, argc, argv);
  options.static_dir = static_dir;

  touchboard::bridge::server srv(options);
  try {
    srv.listen();
  } catch (const touchboard::bridge::bind_error& e) {
    std::cerr << "touchboard-bridge: " << e.what() << '\n';
    return touchboard::cli::exit_bind;
  }
  g_server = &srv;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "touchboard-bridge listening on " << options.address << ":" << srv.port()
            << " (ws path /ws, health /healthz)" << std::endl;
  srv.run();
  return 0;
}

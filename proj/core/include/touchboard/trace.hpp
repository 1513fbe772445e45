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

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace touchboard {

// Line-oriented trace format, one event per line:
//
//   <tick> button <id>
//   <tick> pen <down|move> <nx> <ny>
//   <tick> pen up
//
// Blank lines and text after '#' are ignored. Coordinates must lie in
// [0, 1]. Parsing does not check tick ordering; run_trace does.

/// Throws trace_parse_error naming the 1-based line.
[[nodiscard]] std::vector<trace_event> parse_trace(std::istream& in);
[[nodiscard]] std::vector<trace_event> parse_trace(std::string_view text);
[[nodiscard]] std::vector<trace_event> load_trace(const std::filesystem::path& path);

[[nodiscard]] std::string format_trace_event(const trace_event& ev);

}  // namespace touchboard

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
#include <touchboard/render.hpp>
#include <touchboard/sevenseg.hpp>
#include <touchboard/touch_path.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace touchboard::bridge {

// Wire format (see docs/protocol.md):
//   client -> server: JSON text, {"type":"pointer",...} or {"type":"button",...}
//   server -> client: JSON text for "status", "sevenseg", "error";
//                     binary frames with a 24-byte little-endian header.

struct pointer_msg
{
  pen_phase phase = pen_phase::up;
  double nx = 0.0;
  double ny = 0.0;

  friend bool operator==(const pointer_msg&, const pointer_msg&) = default;
};

struct button_msg
{
  button_id id = button_id::power_adaptor;

  friend bool operator==(const button_msg&, const button_msg&) = default;
};

using inbound_msg = std::variant<pointer_msg, button_msg>;

struct protocol_error
{
  std::string field;
  std::string message;
};

struct parse_result
{
  std::optional<inbound_msg> msg;
  std::optional<protocol_error> error;
};

/// Validates one inbound JSON text message. Never throws.
[[nodiscard]] parse_result parse_inbound(std::string_view text);

[[nodiscard]] device_input to_device_input(const inbound_msg& msg);

inline constexpr std::string_view frame_magic = "TBFR";
inline constexpr std::size_t frame_header_size = 24;

/// magic[4] | seq u64 | width u16 | height u16 | fb hash u64 | RGB rows
[[nodiscard]] std::string encode_frame(std::uint64_t seq, const framebuffer& fb);

struct decoded_frame
{
  std::uint64_t seq = 0;
  int width = 0;
  int height = 0;
  std::uint64_t fb_hash = 0;
  std::vector<std::uint8_t> pixels;
};

[[nodiscard]] std::optional<decoded_frame> decode_frame(std::string_view bytes);

[[nodiscard]] std::string encode_sevenseg(const digit_bank& digits);

/// Power, mode, colour and battery gauge. Battery charge is reported to 4
/// decimals so idle drain does not produce a message every tick.
[[nodiscard]] std::string encode_status(const device& dev);

[[nodiscard]] std::string encode_error(const protocol_error& err);

}  // namespace touchboard::bridge

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


#include <touchboard/bridge/protocol.hpp>

#include <touchboard/evalstats.hpp>

#include <json.hpp>

#include <cmath>

namespace touchboard::bridge {

using nlohmann::json;

namespace {

protocol_error fail(std::string field, std::string message)
{
  return { std::move(field), std::move(message) };
}

std::optional<pen_phase> parse_phase(const std::string& s)
{
  if (s == "down") {
    return pen_phase::down;
  }
  if (s == "move") {
    return pen_phase::move;
  }
  if (s == "up") {
    return pen_phase::up;
  }
  return std::nullopt;
}

std::optional<protocol_error> read_coord(const json& j, const char* key, double& out)
{
  const auto it = j.find(key);
  if (it == j.end()) {
    return fail(key, std::string("missing ") + key);
  }
  if (!it->is_number()) {
    return fail(key, std::string(key) + " must be a number");
  }
  out = it->get<double>();
  if (!std::isfinite(out) || out < 0.0 || out > 1.0) {
    return fail(key, std::string(key) + " must lie in [0, 1]");
  }
  return std::nullopt;
}

}  // namespace

parse_result parse_inbound(std::string_view text)
{
  parse_result r;
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    r.error = fail("payload", "not valid JSON");
    return r;
  }
  if (!j.is_object()) {
    r.error = fail("payload", "expected a JSON object");
    return r;
  }
  const auto type = j.find("type");
  if (type == j.end() || !type->is_string()) {
    r.error = fail("type", "missing or non-string type");
    return r;
  }
  const auto kind = type->get<std::string>();
  if (kind == "button") {
    const auto id = j.find("id");
    if (id == j.end() || !id->is_string()) {
      r.error = fail("id", "button id must be a string");
      return r;
    }
    const auto b = parse_button(id->get<std::string>());
    if (!b) {
      r.error = fail("id", "unknown button '" + id->get<std::string>() + "'");
      return r;
    }
    r.msg = button_msg{ *b };
    return r;
  }
  if (kind == "pointer") {
    const auto phase_it = j.find("phase");
    if (phase_it == j.end() || !phase_it->is_string()) {
      r.error = fail("phase", "pointer phase must be a string");
      return r;
    }
    const auto phase = parse_phase(phase_it->get<std::string>());
    if (!phase) {
      r.error = fail("phase", "phase must be down, move or up");
      return r;
    }
    pointer_msg p;
    p.phase = *phase;
    if (p.phase != pen_phase::up) {
      if (auto e = read_coord(j, "nx", p.nx)) {
        r.error = std::move(e);
        return r;
      }
      if (auto e = read_coord(j, "ny", p.ny)) {
        r.error = std::move(e);
        return r;
      }
    }
    r.msg = p;
    return r;
  }
  r.error = fail("type", "unknown message type '" + kind + "'");
  return r;
}

device_input to_device_input(const inbound_msg& msg)
{
  if (const auto* b = std::get_if<button_msg>(&msg)) {
    return b->id;
  }
  const auto& p = std::get<pointer_msg>(msg);
  switch (p.phase) {
    case pen_phase::down:
      return pen_input::down(p.nx, p.ny);
    case pen_phase::move:
      return pen_input::move(p.nx, p.ny);
    case pen_phase::up:
      break;
  }
  return pen_input::up();
}

namespace {

void put_le(std::string& out, std::uint64_t v, int bytes)
{
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
  }
}

std::uint64_t get_le(std::string_view in, std::size_t offset, int bytes)
{
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(in[offset + static_cast<std::size_t>(i)]))
         << (8 * i);
  }
  return v;
}

}  // namespace

std::string encode_frame(std::uint64_t seq, const framebuffer& fb)
{
  std::string out;
  const auto pixels = fb.bytes();
  out.reserve(frame_header_size + pixels.size());
  out.append(frame_magic);
  put_le(out, seq, 8);
  put_le(out, static_cast<std::uint64_t>(fb.width()), 2);
  put_le(out, static_cast<std::uint64_t>(fb.height()), 2);
  put_le(out, fb.content_hash(), 8);
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  return out;
}

std::optional<decoded_frame> decode_frame(std::string_view bytes)
{
  if (bytes.size() < frame_header_size || bytes.substr(0, 4) != frame_magic) {
    return std::nullopt;
  }
  decoded_frame f;
  f.seq = get_le(bytes, 4, 8);
  f.width = static_cast<int>(get_le(bytes, 12, 2));
  f.height = static_cast<int>(get_le(bytes, 14, 2));
  f.fb_hash = get_le(bytes, 16, 8);
  const auto expected = static_cast<std::size_t>(f.width) * static_cast<std::size_t>(f.height) * 3U;
  if (bytes.size() - frame_header_size != expected) {
    return std::nullopt;
  }
  f.pixels.assign(bytes.begin() + frame_header_size, bytes.end());
  return f;
}

std::string encode_sevenseg(const digit_bank& digits)
{
  const auto packed = digits.packed();
  json j;
  j["type"] = "sevenseg";
  j["bytes"] = std::vector<int>(packed.begin(), packed.end());
  j["text"] = readout(digits);
  return j.dump();
}

std::string encode_status(const device& dev)
{
  json j;
  j["type"] = "status";
  j["power"] = std::string(to_string(dev.power()));
  j["mode"] = std::string(to_string(dev.mode()));
  j["color"] = std::string(to_string(dev.color()));
  if (std::holds_alternative<power_battery>(dev.power())) {
    j["battery_charge"] = evalstats::round_half_up(dev.battery_level(), 4);
  } else {
    j["battery_charge"] = nullptr;
  }
  j["low_battery"] = dev.low_battery();
  return j.dump();
}

std::string encode_error(const protocol_error& err)
{
  json j;
  j["type"] = "error";
  j["field"] = err.field;
  j["message"] = err.message;
  return j.dump();
}

}  // namespace touchboard::bridge

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


#include <touchboard/trace.hpp>

#include <touchboard/errors.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace touchboard {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      words.push_back(line.substr(start, i - start));
    }
  }
  return words;
}

std::uint64_t parse_tick(std::string_view word, std::size_t line)
{
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw trace_parse_error(line, "bad tick '" + std::string(word) + "'");
  }
  return value;
}

double parse_coord(std::string_view word, std::size_t line)
{
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || !std::isfinite(value)) {
    throw trace_parse_error(line, "bad coordinate '" + std::string(word) + "'");
  }
  if (value < 0.0 || value > 1.0) {
    throw trace_parse_error(line, "coordinate " + std::string(word) +
                                    " outside [0, 1]");
  }
  return value;
}

trace_event parse_line(std::string_view text, std::size_t line)
{
  const auto words = split_words(text);
  if (words.size() < 3) {
    throw trace_parse_error(line, "expected '<tick> button <id>' or '<tick> pen <phase> ...'");
  }
  trace_event ev;
  ev.at = parse_tick(words[0], line);
  if (words[1] == "button") {
    if (words.size() != 3) {
      throw trace_parse_error(line, "button events take exactly one id");
    }
    const auto b = parse_button(words[2]);
    if (!b) {
      throw trace_parse_error(line, "unknown button '" + std::string(words[2]) + "'");
    }
    ev.input = *b;
    return ev;
  }
  if (words[1] != "pen") {
    throw trace_parse_error(line, "unknown event kind '" + std::string(words[1]) + "'");
  }
  const auto phase = words[2];
  if (phase == "up") {
    if (words.size() != 3) {
      throw trace_parse_error(line, "pen up takes no coordinates");
    }
    ev.input = pen_input::up();
    return ev;
  }
  if (phase != "down" && phase != "move") {
    throw trace_parse_error(line, "unknown pen phase '" + std::string(phase) + "'");
  }
  if (words.size() != 5) {
    throw trace_parse_error(line, "pen " + std::string(phase) + " needs <nx> <ny>");
  }
  const double nx = parse_coord(words[3], line);
  const double ny = parse_coord(words[4], line);
  ev.input = phase == "down" ? pen_input::down(nx, ny) : pen_input::move(nx, ny);
  return ev;
}

}  // namespace

std::vector<trace_event> parse_trace(std::istream& in)
{
  std::vector<trace_event> events;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    if (split_words(text).empty()) {
      continue;
    }
    events.push_back(parse_line(text, line));
  }
  return events;
}

std::vector<trace_event> parse_trace(std::string_view text)
{
  std::istringstream in{ std::string(text) };
  return parse_trace(in);
}

std::vector<trace_event> load_trace(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open trace " + path.string());
  }
  return parse_trace(in);
}

std::string format_trace_event(const trace_event& ev)
{
  std::ostringstream os;
  os << ev.at << ' ';
  if (const auto* b = std::get_if<button_id>(&ev.input)) {
    os << "button " << to_string(*b);
    return os.str();
  }
  const auto& pen = std::get<pen_input>(ev.input);
  switch (pen.phase()) {
    case pen_phase::down:
      os << "pen down ";
      break;
    case pen_phase::move:
      os << "pen move ";
      break;
    case pen_phase::up:
      os << "pen up";
      return os.str();
  }
  os.precision(17);
  os << pen.nx() << ' ' << pen.ny();
  return os.str();
}

}  // namespace touchboard

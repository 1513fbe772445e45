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


#include <touchboard/coord_store.hpp>

#include <touchboard/errors.hpp>

#include <stdexcept>
#include <string>

namespace touchboard {

coord_register_file::coord_register_file(std::size_t capacity)
  : m_slots(capacity)
{
  if (capacity == 0) {
    throw std::invalid_argument("register file capacity must be positive");
  }
}

void coord_register_file::write_sample(const touch_sample& s)
{
  if (const auto latest = read_latest(); latest && s.seq <= latest->seq) {
    throw stale_sample("sample seq " + std::to_string(s.seq) +
                       " does not follow latest seq " +
                       std::to_string(latest->seq));
  }
  m_slots[m_head] = s;
  m_head = (m_head + 1) % m_slots.size();
  if (m_count < m_slots.size()) {
    ++m_count;
  }
}

std::optional<touch_sample> coord_register_file::read_latest() const
{
  if (m_count == 0) {
    return std::nullopt;
  }
  return m_slots[(m_head + m_slots.size() - 1) % m_slots.size()];
}

void coord_register_file::reset() noexcept
{
  m_head = 0;
  m_count = 0;
}

std::vector<touch_sample> coord_register_file::entries() const
{
  std::vector<touch_sample> out;
  out.reserve(m_count);
  const auto start = (m_head + m_slots.size() - m_count) % m_slots.size();
  for (std::size_t i = 0; i < m_count; ++i) {
    out.push_back(m_slots[(start + i) % m_slots.size()]);
  }
  return out;
}

}  // namespace touchboard

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

#include <touchboard/touch_path.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace touchboard {

/// Bounded register RAM of committed coordinate samples. Oldest entries are
/// evicted once `capacity` is reached.
class coord_register_file
{
public:
  static constexpr std::size_t default_capacity = 1024;

  explicit coord_register_file(std::size_t capacity = default_capacity);

  /// Throws stale_sample unless s.seq is greater than latest()->seq.
  void write_sample(const touch_sample& s);

  [[nodiscard]] std::optional<touch_sample> read_latest() const;

  void reset() noexcept;

  [[nodiscard]] std::size_t capacity() const noexcept { return m_slots.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return m_count; }
  [[nodiscard]] bool empty() const noexcept { return m_count == 0; }

  /// Entries oldest first.
  [[nodiscard]] std::vector<touch_sample> entries() const;

  friend bool operator==(const coord_register_file& lhs,
                         const coord_register_file& rhs)
  {
    return lhs.capacity() == rhs.capacity() && lhs.entries() == rhs.entries();
  }

private:
  std::vector<touch_sample> m_slots;
  std::size_t m_head = 0;  // next slot to write
  std::size_t m_count = 0;
};

}  // namespace touchboard

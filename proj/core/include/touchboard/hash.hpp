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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace touchboard {

/// 64-bit FNV-1a. Stable across platforms, used for framebuffer identity in
/// frame logs and on the bridge wire.
class fnv1a64
{
public:
  static constexpr std::uint64_t offset_basis = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t prime = 0x100000001b3ULL;

  constexpr void update(std::span<const std::uint8_t> bytes) noexcept
  {
    for (const auto b : bytes) {
      m_state ^= b;
      m_state *= prime;
    }
  }

  constexpr void update_u64(std::uint64_t v) noexcept
  {
    for (int i = 0; i < 8; ++i) {
      m_state ^= static_cast<std::uint8_t>(v >> (8 * i));
      m_state *= prime;
    }
  }

  [[nodiscard]] constexpr std::uint64_t digest() const noexcept
  {
    return m_state;
  }

private:
  std::uint64_t m_state = offset_basis;
};

/// 16 lowercase hex digits.
[[nodiscard]] std::string to_hex64(std::uint64_t value);

}  // namespace touchboard
